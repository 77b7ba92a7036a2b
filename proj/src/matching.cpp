#include "factorium/matching.hpp"

#include <algorithm>

namespace factorium {

namespace {

// Textbook O(V^3) blossom search: BFS an alternating tree from each exposed
// root, contracting odd cycles by repointing base[].
struct BlossomSolver {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, blossom, path_mark;
    VertexList queue;

    explicit BlossomSolver(const Graph& graph)
        : g(graph),
          n(graph.size()),
          match(n, -1),
          parent(n, -1),
          base(n, 0),
          used(n, 0),
          blossom(n, 0),
          path_mark(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::fill(path_mark.begin(), path_mark.end(), 0);
        int v = a;
        while (true) {
            v = base[v];
            path_mark[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        while (!path_mark[base[v]]) v = parent[match[v]];
        return base[v];
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool grow_from(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            bool augmented = false;
            g.for_each_neighbor(v, [&](int to) {
                if (augmented) return;
                if (base[v] == base[to] || match[v] == to) return;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom through the common base
                    int cur_base = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // augment along the alternating path back to the root
                        int u = to;
                        while (u != -1) {
                            int pv = parent[u];
                            int next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        augmented = true;
                    } else {
                        used[match[to]] = 1;
                        queue.push_back(match[to]);
                    }
                }
            });
            if (augmented) return true;
        }
        return false;
    }

    void solve() {
        // deterministic greedy seed
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            bool done = false;
            g.for_each_neighbor(v, [&](int u) {
                if (!done && match[u] == -1) {
                    match[v] = u;
                    match[u] = v;
                    done = true;
                }
            });
        }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) grow_from(v);
    }
};

Matching matching_from(const std::vector<int>& match) {
    Matching m;
    for (int v = 0; v < static_cast<int>(match.size()); ++v)
        if (match[v] > v) m.edges.emplace_back(v, match[v]);
    return m;
}

}  // namespace

Matching max_matching(const Graph& g) {
    BlossomSolver solver(g);
    solver.solve();
    return matching_from(solver.match);
}

std::optional<Matching> perfect_matching(const Graph& g) {
    if (g.size() % 2 != 0) return std::nullopt;
    Matching m = max_matching(g);
    if (2 * m.size() != g.size()) return std::nullopt;
    return m;
}

std::optional<Matching> perfect_matching_with_forced_edge(const Graph& g, Edge e) {
    auto [a, b] = e;
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= g.size() || a == b || !g.adjacent(a, b))
        throw std::invalid_argument("forced edge is not an edge of the graph");
    VertexList keep;
    for (int v = 0; v < g.size(); ++v)
        if (v != a && v != b) keep.push_back(v);
    auto rest = perfect_matching(induced_subgraph(g, keep));
    if (!rest) return std::nullopt;
    Matching m;
    m.edges.emplace_back(a, b);
    for (auto [u, v] : rest->edges) m.edges.emplace_back(keep[u], keep[v]);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace factorium
