#ifndef FACTORIUM_MATCHING_HPP
#define FACTORIUM_MATCHING_HPP

#include <optional>

#include "factorium/graph.hpp"

namespace factorium {

/// A set of pairwise vertex-disjoint edges of some host graph.
struct Matching {
    std::vector<Edge> edges;  // (u,v) with u < v, sorted

    int size() const { return static_cast<int>(edges.size()); }
    bool covers(int v) const {
        for (auto [a, b] : edges)
            if (a == v || b == v) return true;
        return false;
    }
};

/// Maximum-cardinality matching via the blossom algorithm. Deterministic:
/// roots and neighbors are scanned in ascending vertex order. Exact for any
/// graph this library builds (including Tutte gadgets).
Matching max_matching(const Graph& g);

/// A matching covering every vertex, or nullopt if none exists.
std::optional<Matching> perfect_matching(const Graph& g);

/// A perfect matching containing edge e, or nullopt. e must be an edge of g.
std::optional<Matching> perfect_matching_with_forced_edge(const Graph& g, Edge e);

}  // namespace factorium

#endif
