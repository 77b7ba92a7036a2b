#include "factorium/factor.hpp"

#include <bit>
#include <sstream>

#include "factorium/matching.hpp"

namespace factorium {

bool is_k_odd_component(const Graph& g, int k, const VertexList& T, const VertexList& C) {
    long long crossing = 0;
    for (int v : C)
        for (int t : T)
            if (g.adjacent(v, t)) ++crossing;
    return (crossing + static_cast<long long>(k) * static_cast<long long>(C.size())) % 2 == 1;
}

long long eta(const Graph& g, int k, const VertexList& S, const VertexList& T) {
    auto comps = components_after_removal(g, S, T);  // validates disjointness
    long long q = 0;
    for (const auto& comp : comps)
        if (is_k_odd_component(g, k, T, comp)) ++q;
    std::vector<char> in_s(g.size(), 0);
    for (int v : S) in_s[v] = 1;
    long long sum_deg = 0;
    for (int x : T)
        g.for_each_neighbor(x, [&](int u) {
            if (!in_s[u]) ++sum_deg;
        });
    return static_cast<long long>(k) * (static_cast<long long>(S.size()) -
                                        static_cast<long long>(T.size())) +
           sum_deg - q;
}

// ---- k-factor via gadget ----------------------------------------------------

long long tutte_gadget_size(const Graph& g, int k) {
    long long total = 0;
    for (int v = 0; v < g.size(); ++v) total += 2LL * g.degree(v) - k;
    return total;
}

std::optional<Factor> find_k_factor(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_k_factor requires k >= 1");
    int n = g.size();
    if (n == 0) return Factor{k, {}};
    if ((static_cast<long long>(k) * n) % 2 != 0) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k) return std::nullopt;

    // widget of vertex v: externals ext_base[v]..+d(v), internals
    // int_base[v]..+(d(v)-k), complete bipartite between them
    std::vector<int> ext_base(n + 1, 0);
    for (int v = 0; v < n; ++v) ext_base[v + 1] = ext_base[v] + g.degree(v);
    std::vector<int> int_base(n + 1, ext_base[n]);
    for (int v = 0; v < n; ++v) int_base[v + 1] = int_base[v] + (g.degree(v) - k);

    Graph gadget(int_base[n]);
    for (int v = 0; v < n; ++v)
        for (int e = ext_base[v]; e < ext_base[v + 1]; ++e)
            for (int i = int_base[v]; i < int_base[v + 1]; ++i) gadget.add_edge(e, i);

    // external slots handed out in ascending neighbor order, so the slot of
    // edge uv at u is the rank of v within N(u)
    auto ext_node = [&](int u, int v) {
        int rank = 0;
        g.for_each_neighbor(u, [&](int w) {
            if (w < v) ++rank;
        });
        return ext_base[u] + rank;
    };
    auto edge_list = g.edges();
    std::vector<Edge> link_of_edge;
    link_of_edge.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        int a = ext_node(u, v), b = ext_node(v, u);
        gadget.add_edge(a, b);
        link_of_edge.emplace_back(a, b);
    }

    auto pm = perfect_matching(gadget);
    if (!pm) return std::nullopt;

    std::vector<int> mate(int_base[n], -1);
    for (auto [a, b] : pm->edges) {
        mate[a] = b;
        mate[b] = a;
    }
    Factor f;
    f.k = k;
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        if (mate[link_of_edge[i].first] == link_of_edge[i].second)
            f.edges.push_back(edge_list[i]);
    return f;
}

// ---- exhaustive certificate search ------------------------------------------

namespace {

constexpr int kSweepLimit = 16;

struct PairEval {
    long long eta;
    std::uint32_t odd_union;  // U as a mask
};

// eta and U for one (S,T) assignment, single-word masks (n <= 16)
PairEval eval_pair(const std::uint32_t* adj, int n, int k, std::uint32_t S, std::uint32_t T) {
    std::uint32_t all = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    std::uint32_t rest = all & ~S & ~T;
    long long q = 0;
    std::uint32_t odd_union = 0;
    std::uint32_t todo = rest;
    while (todo) {
        std::uint32_t comp = todo & (~todo + 1);  // seed = lowest remaining bit
        while (true) {
            std::uint32_t grow = comp;
            std::uint32_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[v] & rest;
            }
            if (grow == comp) break;
            comp = grow;
        }
        todo &= ~comp;
        long long crossing = 0;
        std::uint32_t scan = comp;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            crossing += std::popcount(adj[v] & T);
        }
        if ((crossing + static_cast<long long>(k) * std::popcount(comp)) % 2 == 1) {
            ++q;
            odd_union |= comp;
        }
    }
    long long sum_deg = 0;
    std::uint32_t scan = T;
    while (scan) {
        int x = std::countr_zero(scan);
        scan &= scan - 1;
        sum_deg += std::popcount(adj[x] & ~S);
    }
    long long eta_val = static_cast<long long>(k) *
                            (std::popcount(S) - std::popcount(T)) +
                        sum_deg - q;
    return {eta_val, odd_union};
}

VertexList mask_to_list(std::uint32_t m) {
    VertexList out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// sorted-vertex-list lexicographic order on sets
bool set_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

void fill_masks(const Graph& g, std::uint32_t* adj) {
    for (int v = 0; v < g.size(); ++v) {
        adj[v] = 0;
        g.for_each_neighbor(v, [&](int u) { adj[v] |= 1u << u; });
    }
}

TutteCertificate build_certificate(const Graph& g, int k, std::uint32_t S, std::uint32_t T,
                                   long long eta_val) {
    TutteCertificate cert;
    cert.k = k;
    cert.S = mask_to_list(S);
    cert.T = mask_to_list(T);
    cert.eta = eta_val;
    for (const auto& comp : components_after_removal(g, cert.S, cert.T))
        if (is_k_odd_component(g, k, cert.T, comp)) cert.odd_components.push_back(comp);
    return cert;
}

template <typename Visit>
void sweep_disjoint_pairs(const Graph& g, int k, Visit&& visit) {
    int n = g.size();
    if (n > kSweepLimit)
        throw std::length_error("certificate search is exhaustive over 3^n pairs; n <= 16 only");
    std::uint32_t adj[kSweepLimit] = {};
    fill_masks(g, adj);
    std::uint32_t all = n >= 32 ? 0xffffffffu : ((1u << n) - 1);
    for (std::uint32_t S = 0;; ++S) {
        std::uint32_t rest = all & ~S;
        // subsets of rest, ascending as integers
        std::uint32_t T = 0;
        while (true) {
            PairEval ev = eval_pair(adj, n, k, S, T);
            visit(S, T, ev);
            if (T == rest) break;
            T = (T - rest) & rest;  // next subset
        }
        if (S == all) break;
    }
}

}  // namespace

std::optional<TutteCertificate> find_tutte_certificate(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("certificate search requires k >= 1");
    bool have = false;
    long long best_eta = 0;
    std::uint32_t best_s = 0, best_t = 0;
    sweep_disjoint_pairs(g, k, [&](std::uint32_t S, std::uint32_t T, const PairEval& ev) {
        if (!have || ev.eta < best_eta) {
            have = true;
            best_eta = ev.eta;
            best_s = S;
            best_t = T;
        }
    });
    if (!have || best_eta >= 0) return std::nullopt;
    return build_certificate(g, k, best_s, best_t, best_eta);
}

std::optional<ExtremalCertificate> find_extremal_certificate(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("certificate search requires k >= 1");
    int n = g.size();
    bool have = false;
    long long best_eta = 0;
    int best_u = 0, best_rest = 0;
    std::uint32_t best_s = 0, best_t = 0;
    sweep_disjoint_pairs(g, k, [&](std::uint32_t S, std::uint32_t T, const PairEval& ev) {
        int u = std::popcount(ev.odd_union);
        int rest = n - std::popcount(S) - std::popcount(T) - u;
        bool better;
        if (!have)
            better = true;
        else if (ev.eta != best_eta)
            better = ev.eta < best_eta;
        else if (u != best_u)
            better = u < best_u;
        else if (rest != best_rest)
            better = rest > best_rest;
        else if (S != best_s)
            better = set_lex_less(S, best_s);
        else
            better = set_lex_less(T, best_t);
        if (better) {
            have = true;
            best_eta = ev.eta;
            best_u = u;
            best_rest = rest;
            best_s = S;
            best_t = T;
        }
    });
    if (!have || best_eta >= 0) return std::nullopt;

    ExtremalCertificate ext;
    ext.base = build_certificate(g, k, best_s, best_t, best_eta);
    ext.u_size = best_u;
    ext.rest_size = best_rest;
    std::vector<char> in_s(n, 0);
    for (int v : ext.base.S) in_s[v] = 1;
    std::vector<char> in_t(n, 0);
    for (int v : ext.base.T) in_t[v] = 1;
    for (const auto& comp : ext.base.odd_components)
        for (int v : comp) {
            int to_t = 0, d_minus_s = 0;
            g.for_each_neighbor(v, [&](int u) {
                if (in_t[u]) ++to_t;
                if (!in_s[u]) ++d_minus_s;
            });
            if (to_t > k - 1) ext.violations_edge_bound.push_back(v);
            if (d_minus_s < k + 1) ext.violations_degree_bound.push_back(v);
        }
    return ext;
}

bool verify_duality(const Graph& g, int k) {
    bool factor = find_k_factor(g, k).has_value();
    bool certificate = find_tutte_certificate(g, k).has_value();
    return factor != certificate;
}

std::string to_text(const TutteCertificate& cert) {
    std::ostringstream out;
    out << "S:";
    for (int v : cert.S) out << ' ' << v;
    out << "\nT:";
    for (int v : cert.T) out << ' ' << v;
    out << "\neta: " << cert.eta << "\nodd:";
    for (const auto& comp : cert.odd_components) {
        out << " {";
        for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? " " : "") << comp[i];
        out << "}";
    }
    out << "\n";
    return out.str();
}

}  // namespace factorium
