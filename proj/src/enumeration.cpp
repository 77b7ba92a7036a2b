#include "factorium/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <thread>

#include "factorium/factor.hpp"
#include "factorium/factorization.hpp"

namespace factorium {

namespace {

using u128 = unsigned __int128;

constexpr int kGenLimit = 15;  // upper-triangle code fits 105 bits

// Generation works on the upper-triangle bit string in column-major order
// b(0,1), b(0,2), b(1,2), b(0,3), ...; position p occupies bit 127-p so that
// lexicographic comparison of strings is plain integer comparison. The
// canonical form of a class is the lexicographically maximal string over all
// vertex orderings.
struct GenState {
    int n = 0;
    int npos = 0;
    std::uint32_t adj[kGenLimit] = {};
    int deg[kGenLimit] = {};
    u128 code = 0;
    int pos_u[kGenLimit * (kGenLimit - 1) / 2];
    int pos_v[kGenLimit * (kGenLimit - 1) / 2];

    explicit GenState(int vertices) : n(vertices), npos(vertices * (vertices - 1) / 2) {
        int p = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                pos_u[p] = u;
                pos_v[p] = v;
                ++p;
            }
    }

    // bits of column j (adjacency of canonical vertex j to 0..j-1),
    // most significant bit = b(0,j)
    std::uint32_t column(int j) const {
        if (j == 0) return 0;
        int last = j * (j + 1) / 2 - 1;
        return static_cast<std::uint32_t>(code >> (127 - last)) & ((1u << j) - 1);
    }
};

// x,y interchangeable by a transposition automorphism (twins)
bool twins(const GenState& g, int x, int y) {
    std::uint32_t self = (1u << x) | (1u << y);
    return ((g.adj[x] ^ g.adj[y]) & ~self) == 0;
}

// Is the current string the lexicographic maximum over all orderings?
// Branch and bound over vertex placements: a branch dies as soon as its
// column falls below the target, wins as soon as it exceeds it.
struct CanonicityTest {
    const GenState& g;
    std::uint32_t tcol[kGenLimit];
    int placed[kGenLimit];
    std::uint32_t used = 0;

    explicit CanonicityTest(const GenState& state) : g(state) {
        for (int j = 0; j < g.n; ++j) tcol[j] = g.column(j);
    }

    bool bigger_exists(int j) {
        int tried[kGenLimit];
        int ntried = 0;
        for (int x = 0; x < g.n; ++x) {
            if (used >> x & 1) continue;
            bool dup = false;
            for (int t = 0; t < ntried && !dup; ++t) dup = twins(g, x, tried[t]);
            if (dup) continue;
            tried[ntried++] = x;
            std::uint32_t col = 0;
            for (int i = 0; i < j; ++i) col = (col << 1) | (g.adj[x] >> placed[i] & 1);
            if (col > tcol[j]) return true;
            if (col == tcol[j] && j + 1 < g.n) {
                placed[j] = x;
                used |= 1u << x;
                bool found = bigger_exists(j + 1);
                used &= ~(1u << x);
                if (found) return true;
            }
        }
        return false;
    }

    bool canonical() { return !bigger_exists(0); }
};

Graph to_graph(const GenState& s) {
    Graph g(s.n);
    for (int v = 0; v < s.n; ++v) {
        std::uint32_t higher = s.adj[v] >> (v + 1) << (v + 1);
        while (higher) {
            int u = std::countr_zero(higher);
            higher &= higher - 1;
            g.add_edge(v, u);
        }
    }
    return g;
}

struct GenCaps {
    int max_degree = kGenLimit;  // effectively none
    int pair_sum_cap = 2 * kGenLimit;

    // hereditary under edge deletion, so pruning the tree is complete
    bool allows(const GenState& g, int u, int v) const {
        int du = g.deg[u] + 1, dv = g.deg[v] + 1;
        if (du > max_degree || dv > max_degree) return false;
        if (du + dv > pair_sum_cap) return false;
        std::uint32_t scan = g.adj[u];
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (du + g.deg[w] > pair_sum_cap) return false;
        }
        scan = g.adj[v];
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (dv + g.deg[w] > pair_sum_cap) return false;
        }
        return true;
    }
};

void gen_dfs(GenState& g, int last_pos, const GenCaps& caps, const GraphSink& sink) {
    sink(to_graph(g));
    for (int p = last_pos + 1; p < g.npos; ++p) {
        int u = g.pos_u[p], v = g.pos_v[p];
        if (!caps.allows(g, u, v)) continue;
        g.adj[u] |= 1u << v;
        g.adj[v] |= 1u << u;
        ++g.deg[u];
        ++g.deg[v];
        g.code |= static_cast<u128>(1) << (127 - p);
        if (CanonicityTest(g).canonical()) gen_dfs(g, p, caps, sink);
        g.adj[u] &= ~(1u << v);
        g.adj[v] &= ~(1u << u);
        --g.deg[u];
        --g.deg[v];
        g.code &= ~(static_cast<u128>(1) << (127 - p));
    }
}

void generate(int n, const GenCaps& caps, const GraphSink& sink) {
    GenState g(n);
    gen_dfs(g, -1, caps, sink);
}

}  // namespace

void enumerate_graphs(int n, const GraphSink& sink) {
    if (n < 0) throw std::invalid_argument("negative n");
    if (n > 10) throw std::length_error("enumerate_graphs supports n <= 10");
    generate(n, GenCaps{}, sink);
}

void enumerate_ore_graphs(int n, int k, const GraphSink& sink) {
    if (n < 1 || k < 1 || k > n - 1)
        throw std::invalid_argument("enumerate_ore_graphs requires 1 <= k <= n-1");
    if (2 * k >= n) {
        if (n > 12) throw std::length_error("complement-cap enumeration supports n <= 12");
    } else if (n > 8) {
        throw std::length_error("filtered enumeration for k < n/2 supports n <= 8");
    }
    GenCaps caps;
    caps.pair_sum_cap = n - k;  // on the complement
    generate(n, caps, [&](const Graph& cg) { sink(complement(cg)); });
}

void enumerate_regular_graphs(int n, int D, const GraphSink& sink) {
    if (n < 0 || D < 0 || (n > 0 && D > n - 1))
        throw std::invalid_argument("enumerate_regular_graphs requires 0 <= D <= n-1");
    if ((static_cast<long long>(n) * D) % 2 != 0)
        throw std::invalid_argument("n*D must be even");
    if (n > 10) throw std::length_error("enumerate_regular_graphs supports n <= 10");
    GenCaps caps;
    caps.max_degree = D;
    generate(n, caps, [&](const Graph& g) {
        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) != D) return;
        sink(g);
    });
}

std::array<std::uint64_t, 2> canonical_code(const Graph& graph) {
    int n = graph.size();
    if (n > 16) throw std::length_error("canonical_code supports n <= 16");
    std::uint32_t adj[16] = {};
    for (int v = 0; v < n; ++v)
        graph.for_each_neighbor(v, [&](int u) { adj[v] |= 1u << u; });

    u128 best = 0;
    int placed[16];
    std::uint32_t used = 0;
    // maximize column by column; compare prefixes against the best complete
    // code found so far, recomputed at every node so later best-updates
    // tighten earlier branches
    auto dfs = [&](auto&& self, int j, u128 cur) -> void {
        int prefix_bits = j * (j - 1) / 2;  // columns 0..j-1 are fixed
        if (prefix_bits > 0) {
            u128 mask = ~((static_cast<u128>(1) << (128 - prefix_bits)) - 1);
            if ((cur & mask) < (best & mask)) return;
        }
        if (j == n) {
            if (cur > best) best = cur;
            return;
        }
        // candidates ordered by column value, ties by vertex id
        struct Cand {
            std::uint32_t col;
            int x;
        };
        Cand cands[16];
        int nc = 0;
        for (int x = 0; x < n; ++x) {
            if (used >> x & 1) continue;
            bool dup = false;
            for (int t = 0; t < nc && !dup; ++t) {
                int y = cands[t].x;
                std::uint32_t self_bits = (1u << x) | (1u << y);
                dup = ((adj[x] ^ adj[y]) & ~self_bits) == 0;
            }
            if (dup) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < j; ++i) col = (col << 1) | (adj[x] >> placed[i] & 1);
            cands[nc++] = {col, x};
        }
        std::sort(cands, cands + nc, [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col > b.col : a.x < b.x;
        });
        for (int c = 0; c < nc; ++c) {
            // column j ends at position j(j+1)/2 - 1; its LSB lands on that bit
            int shift = 127 - (j * (j + 1) / 2 - 1);
            u128 add = j == 0 ? 0 : (static_cast<u128>(cands[c].col) << shift);
            placed[j] = cands[c].x;
            used |= 1u << cands[c].x;
            self(self, j + 1, cur | add);
            used &= ~(1u << cands[c].x);
        }
    };
    dfs(dfs, 0, 0);
    return {static_cast<std::uint64_t>(best >> 64), static_cast<std::uint64_t>(best)};
}

// ---- counterexample searches ------------------------------------------------

namespace {

template <typename Check>
SearchReport run_search(int n, int k, int jobs, Check&& check) {
    auto start = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n = n;
    rep.k = k;

    std::vector<Graph> universe;
    enumerate_ore_graphs(n, k, [&](const Graph& g) { universe.push_back(g); });
    rep.graphs_scanned = static_cast<long long>(universe.size());

    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(
        std::min<long long>(jobs, std::max<long long>(static_cast<long long>(universe.size()), 1)));

    std::vector<long long> ore_count(jobs, 0);
    // graph6 recorded at the moment of detection, keyed by scan index so the
    // merged list is in enumeration order for any worker count
    std::vector<std::vector<std::pair<std::size_t, std::string>>> fails(jobs);
    std::atomic<long long> progress{0};

    auto worker = [&](int w) {
        for (std::size_t i = w; i < universe.size(); i += jobs) {
            const Graph& g = universe[i];
            if (ore_report(g, k).is_ore_type()) ++ore_count[w];
            if (!check(g)) fails[w].emplace_back(i, emit_graph6(g));
            long long done = ++progress;
            if (done % 1000000 == 0)
                std::fprintf(stderr, "scanned %lld graphs (n=%d k=%d)\n", done, n, k);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::pair<std::size_t, std::string>> all_fail;
    for (auto& part : fails) all_fail.insert(all_fail.end(), part.begin(), part.end());
    std::sort(all_fail.begin(), all_fail.end());
    for (auto& [i, g6] : all_fail) rep.failures.push_back(std::move(g6));
    for (long long c : ore_count) rep.ore_graphs += c;

    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

SearchReport search_win_counterexample(int n, int k, int jobs) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("search requires even n >= 2");
    if (k < 1 || k > n - 2) throw std::invalid_argument("search-win requires 1 <= k <= n-2");
    return run_search(n, k, jobs,
                      [k](const Graph& g) { return k_disjoint_perfect_matchings(g, k).has_value(); });
}

SearchReport search_kfactor_counterexample(int n, int k, int jobs) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("search requires even n >= 2");
    if (k < n / 2 || k > n - 1)
        throw std::invalid_argument("search-kfactor requires n/2 <= k <= n-1");
    return run_search(n, k, jobs, [k](const Graph& g) { return find_k_factor(g, k).has_value(); });
}

std::string to_text(const SearchReport& rep) {
    std::string out = "n=" + std::to_string(rep.n) + " k=" + std::to_string(rep.k) +
                      " scanned=" + std::to_string(rep.graphs_scanned) +
                      " ore=" + std::to_string(rep.ore_graphs) +
                      " failures=" + std::to_string(rep.failures.size()) + "\n";
    for (const auto& g6 : rep.failures) out += g6 + "\n";
    return out;
}

}  // namespace factorium
