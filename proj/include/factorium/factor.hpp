#ifndef FACTORIUM_FACTOR_HPP
#define FACTORIUM_FACTOR_HPP

#include <optional>

#include "factorium/graph.hpp"

namespace factorium {

/// Spanning subgraph with every vertex of degree exactly k.
struct Factor {
    int k = 0;
    std::vector<Edge> edges;  // subset of the host graph's edges, sorted
};

/// Tutte non-existence witness: disjoint (S,T) with
///   eta(S,T) = k|S| - k|T| + sum_{x in T} d_{G-S}(x) - q(S,T) < 0,
/// where q counts the k-odd components of G-S-T.
struct TutteCertificate {
    int k = 0;
    VertexList S, T;  // ascending, disjoint
    long long eta = 0;
    std::vector<VertexList> odd_components;  // the k-odd components of G-S-T

    /// eta <= -2 is the classical statement's threshold; when k*|V| is odd
    /// eta is odd too, so the sharpest achievable witness is eta = -1.
    bool meets_classical_threshold() const { return eta <= -2; }
};

/// Certificate chosen by the extremal rules: (a) eta minimal, (b) |U| minimal
/// subject to (a), (c) |V-S-T-U| maximal subject to (a),(b); remaining ties
/// broken by smallest (S,T) in sorted-set order. U is the union of k-odd
/// components. Carries the structural conclusions e_G(v,T) <= k-1 and
/// d_{G-S}(v) >= k+1 for v in U; any violating vertices are recorded rather
/// than silently accepted.
struct ExtremalCertificate {
    TutteCertificate base;
    int u_size = 0;
    int rest_size = 0;
    VertexList violations_edge_bound;    // v in U with e_G(v,T) > k-1
    VertexList violations_degree_bound;  // v in U with d_{G-S}(v) < k+1

    bool conclusions_hold() const {
        return violations_edge_bound.empty() && violations_degree_bound.empty();
    }
};

/// Parity test e_G(V(C),T) + k|V(C)| odd for a component C of G-S-T.
bool is_k_odd_component(const Graph& g, int k, const VertexList& T, const VertexList& C);

/// Exact eta(S,T). S and T must be disjoint.
long long eta(const Graph& g, int k, const VertexList& S, const VertexList& T);

/// k-factor via the Tutte gadget: per vertex v, d(v) external + d(v)-k
/// internal nodes, complete bipartite inside the widget, one external-external
/// edge per graph edge; a perfect matching of the gadget pulls back to the
/// factor. Requires k >= 1.
std::optional<Factor> find_k_factor(const Graph& g, int k);

/// Exhaustive search over all 3^n disjoint (S,T) assignments (n <= 16).
/// Returns the first global-minimum-eta pair in scan order (S ascending by
/// mask, then T ascending) whenever min eta < 0, i.e. whenever no k-factor
/// exists; nullopt otherwise.
std::optional<TutteCertificate> find_tutte_certificate(const Graph& g, int k);

/// Exhaustive extremal selection per rules (a),(b),(c). nullopt iff a
/// k-factor exists. n <= 16.
std::optional<ExtremalCertificate> find_extremal_certificate(const Graph& g, int k);

/// True iff exactly one of find_k_factor / find_tutte_certificate succeeds.
bool verify_duality(const Graph& g, int k);

/// Number of vertices of the Tutte gadget, sum over v of (2 d(v) - k);
/// meaningful when min degree >= k.
long long tutte_gadget_size(const Graph& g, int k);

/// Line-oriented text form: "S: ...", "T: ...", "eta: z", "odd: {..} {..}".
std::string to_text(const TutteCertificate& cert);

}  // namespace factorium

#endif
