#include "factorium/factorization.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace factorium {

namespace {

constexpr int kMaskLimit = 64;

// residual adjacency as single-word rows
struct MaskGraph {
    int n = 0;
    std::uint64_t adj[kMaskLimit] = {};

    static MaskGraph from(const Graph& g) {
        if (g.size() > kMaskLimit)
            throw std::length_error("factorization routines support n <= 64");
        MaskGraph m;
        m.n = g.size();
        for (int v = 0; v < m.n; ++v)
            g.for_each_neighbor(v, [&](int u) { m.adj[v] |= 1ull << u; });
        return m;
    }

    void take(int u, int v) {
        adj[u] &= ~(1ull << v);
        adj[v] &= ~(1ull << u);
    }
    void give(int u, int v) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }

};

// All perfect matchings of the residual restricted to `uncovered`, extending
// `picked`. Matches the lowest uncovered vertex against each admissible
// neighbor in ascending order. fn returns true to stop the enumeration.
bool for_each_pm(MaskGraph& g, std::uint64_t uncovered, std::vector<Edge>& picked,
                 const std::function<bool(const std::vector<Edge>&)>& fn) {
    if (uncovered == 0) return fn(picked);
    int v = std::countr_zero(uncovered);
    std::uint64_t cand = g.adj[v] & uncovered;
    if (cand == 0) return false;
    // dead-vertex prune
    std::uint64_t scan = uncovered & ~(1ull << v);
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        if ((g.adj[u] & uncovered & ~(1ull << u)) == 0) return false;
    }
    while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        picked.emplace_back(v, u);
        bool stop = for_each_pm(g, uncovered & ~(1ull << v) & ~(1ull << u), picked, fn);
        picked.pop_back();
        if (stop) return true;
    }
    return false;
}

Matching to_matching(const std::vector<Edge>& picked) {
    Matching m;
    m.edges = picked;
    for (auto& [u, v] : m.edges)
        if (u > v) std::swap(u, v);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

std::uint64_t bits_above(std::uint64_t m, int v) {
    return v >= 63 ? 0 : m >> (v + 1) << (v + 1);
}

std::optional<Edge> lowest_edge(const MaskGraph& g) {
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t higher = bits_above(g.adj[v], v);
        if (higher) return Edge{v, std::countr_zero(higher)};
    }
    return std::nullopt;
}

bool residual_has_pm(const MaskGraph& g, std::uint64_t uncovered) {
    VertexList keep;
    std::uint64_t scan = uncovered;
    while (scan) {
        keep.push_back(std::countr_zero(scan));
        scan &= scan - 1;
    }
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adj[keep[i]] >> keep[j] & 1)
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return perfect_matching(h).has_value();
}

bool solve_one_factorization(MaskGraph& g, std::uint64_t full, std::vector<Matching>& out) {
    auto e0 = lowest_edge(g);
    if (!e0) return true;  // every edge covered
    auto [a, b] = *e0;
    std::vector<Edge> picked{{a, b}};
    bool done = false;
    g.take(a, b);
    for_each_pm(g, full & ~(1ull << a) & ~(1ull << b), picked,
                [&](const std::vector<Edge>& pm_edges) {
                    Matching m = to_matching(pm_edges);
                    for (auto [u, v] : m.edges)
                        if (!(u == a && v == b) && !(u == b && v == a)) g.take(u, v);
                    out.push_back(m);
                    if (solve_one_factorization(g, full, out)) {
                        done = true;
                        return true;
                    }
                    out.pop_back();
                    for (auto [u, v] : m.edges)
                        if (!(u == a && v == b) && !(u == b && v == a)) g.give(u, v);
                    return false;
                });
    g.give(a, b);
    return done;
}

}  // namespace

std::optional<Factorization> one_factorization(const Graph& g) {
    if (g.size() % 2 != 0) throw std::invalid_argument("one_factorization requires even n");
    if (!g.is_regular()) throw std::invalid_argument("one_factorization requires a regular graph");
    MaskGraph m = MaskGraph::from(g);
    std::uint64_t full = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
    Factorization f;
    if (!solve_one_factorization(m, full, f.matchings)) return std::nullopt;
    return f;
}

namespace {

bool solve_k_disjoint(MaskGraph& g, std::uint64_t full, int k, int level, int last_partner,
                      std::vector<Matching>& out) {
    if (level == k) return true;
    // vertex 0 needs k-level distinct partners above last_partner
    std::uint64_t cand = g.adj[0] & bits_above(~0ull, last_partner);
    if (std::popcount(cand) < k - level) return false;
    if (!residual_has_pm(g, full)) return false;
    while (cand) {
        int x = std::countr_zero(cand);
        cand &= cand - 1;
        std::vector<Edge> picked{{0, x}};
        g.take(0, x);
        bool done = false;
        for_each_pm(g, full & ~1ull & ~(1ull << x), picked, [&](const std::vector<Edge>& pm) {
            Matching m = to_matching(pm);
            for (auto [u, v] : m.edges)
                if (!(u == 0 && v == x)) g.take(u, v);
            out.push_back(m);
            if (solve_k_disjoint(g, full, k, level + 1, x, out)) {
                done = true;
                return true;
            }
            out.pop_back();
            for (auto [u, v] : m.edges)
                if (!(u == 0 && v == x)) g.give(u, v);
            return false;
        });
        g.give(0, x);
        if (done) return true;
    }
    return false;
}

}  // namespace

std::optional<Factorization> k_disjoint_perfect_matchings(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_disjoint_perfect_matchings requires k >= 1");
    if (g.size() % 2 != 0)
        throw std::invalid_argument("k_disjoint_perfect_matchings requires even n");
    MaskGraph m = MaskGraph::from(g);
    std::uint64_t full = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
    Factorization f;
    if (g.size() == 0) {
        f.matchings.assign(k, Matching{});
        return f;
    }
    if (!solve_k_disjoint(m, full, k, 0, -1, f.matchings)) return std::nullopt;
    return f;
}

namespace {

// Every spanning subgraph with all degrees exactly k, one callback per
// factor: vertices are saturated in ascending order, partners chosen as
// ascending combinations among higher unsaturated neighbors.
bool enumerate_k_factors(const Graph& g, int k, std::vector<int>& need,
                         std::vector<std::vector<char>>& chosen, int v,
                         const std::function<bool(const Graph&)>& fn) {
    int n = g.size();
    if (v == n) {
        Graph factor(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (chosen[a][b]) factor.add_edge(a, b);
        return fn(factor);
    }
    if (need[v] == 0) return enumerate_k_factors(g, k, need, chosen, v + 1, fn);

    VertexList avail;
    g.for_each_neighbor(v, [&](int u) {
        if (u > v && need[u] > 0) avail.push_back(u);
    });
    int r = need[v];
    if (static_cast<int>(avail.size()) < r) return false;

    // ascending combinations of size r from avail
    VertexList pick(r);
    std::function<bool(int, int)> combos = [&](int idx, int from) -> bool {
        if (idx == r) {
            for (int u : pick) {
                chosen[v][u] = chosen[u][v] = 1;
                --need[u];
            }
            need[v] = 0;
            bool stop = enumerate_k_factors(g, k, need, chosen, v + 1, fn);
            need[v] = r;
            for (int u : pick) {
                chosen[v][u] = chosen[u][v] = 0;
                ++need[u];
            }
            return stop;
        }
        for (int i = from; i <= static_cast<int>(avail.size()) - (r - idx); ++i) {
            pick[idx] = avail[i];
            if (combos(idx + 1, i + 1)) return true;
        }
        return false;
    };
    return combos(0, 0);
}

}  // namespace

std::optional<Factorization> decompose_via_factor(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("decompose_via_factor requires k >= 1");
    if (g.size() % 2 != 0) return std::nullopt;
    if (g.size() == 0) {
        Factorization f;
        f.matchings.assign(k, Matching{});
        return f;
    }
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) < k) return std::nullopt;

    std::optional<Factorization> result;
    std::vector<int> need(g.size(), k);
    std::vector<std::vector<char>> chosen(g.size(), std::vector<char>(g.size(), 0));
    enumerate_k_factors(g, k, need, chosen, 0, [&](const Graph& factor) {
        auto f = one_factorization(factor);
        if (f) {
            result = std::move(f);
            return true;
        }
        return false;
    });
    return result;
}

std::string to_text(const Factorization& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.matchings.size(); ++i) {
        out << "M" << (i + 1) << ":";
        bool first = true;
        for (auto [u, v] : f.matchings[i].edges) {
            out << (first ? " " : "") << "(" << u << "," << v << ")";
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace factorium
