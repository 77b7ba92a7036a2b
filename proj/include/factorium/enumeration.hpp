#ifndef FACTORIUM_ENUMERATION_HPP
#define FACTORIUM_ENUMERATION_HPP

#include <array>
#include <functional>
#include <string>

#include "factorium/graph.hpp"

namespace factorium {

using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class on exactly n vertices, streamed
/// in a deterministic order. Orderly generation: the canonical form of every
/// emitted graph deletes back (drop its last upper-triangle bit) to its
/// parent in the generation tree. n <= 10.
void enumerate_graphs(int n, const GraphSink& sink);

/// Isomorphism classes satisfying the Ore-type-(k-2) condition
/// (nonadjacent degree sums >= n+k-2). Generated through complements: g
/// qualifies iff every complement edge uv has dbar(u)+dbar(v) <= n-k, an
/// edge-local cap that prunes the generation tree hard for k >= n/2.
/// n <= 12 for k >= n/2, n <= 8 otherwise; 1 <= k <= n-1.
void enumerate_ore_graphs(int n, int k, const GraphSink& sink);

/// Isomorphism classes of D-regular graphs on n vertices (degree-capped
/// generation, then exact-regularity filter). Requires n*D even, n <= 10.
void enumerate_regular_graphs(int n, int D, const GraphSink& sink);

/// Lexicographically maximal upper-triangle code over all vertex orderings,
/// as (hi, lo) 64-bit halves; equal codes <=> isomorphic graphs. n <= 16.
std::array<std::uint64_t, 2> canonical_code(const Graph& g);

/// Counterexample-search result over one (n, k) universe.
struct SearchReport {
    int n = 0;
    int k = 0;
    long long graphs_scanned = 0;
    long long ore_graphs = 0;
    std::vector<std::string> failures;  // graph6, in enumeration order
    double elapsed_s = 0.0;

    bool conjecture_holds() const { return failures.empty(); }
};

/// Scan every Ore-type-(k-2) class on n vertices for one lacking k disjoint
/// perfect matchings. n even, 1 <= k <= n-2. jobs = worker threads; the
/// report is identical for every worker count.
SearchReport search_win_counterexample(int n, int k, int jobs = 1);

/// Scan every Ore-type-(k-2) class for one lacking a k-factor.
/// n even, n/2 <= k <= n-1.
SearchReport search_kfactor_counterexample(int n, int k, int jobs = 1);

/// Header "n=<n> k=<k> scanned=<c> ore=<c> failures=<c>", then one graph6
/// line per failure.
std::string to_text(const SearchReport& rep);

}  // namespace factorium

#endif
