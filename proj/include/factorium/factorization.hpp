#ifndef FACTORIUM_FACTORIZATION_HPP
#define FACTORIUM_FACTORIZATION_HPP

#include <optional>

#include "factorium/matching.hpp"

namespace factorium {

/// Ordered list of pairwise edge-disjoint perfect matchings of a host graph.
struct Factorization {
    std::vector<Matching> matchings;

    int size() const { return static_cast<int>(matchings.size()); }
};

/// Decompose a D-regular graph with even n into D edge-disjoint perfect
/// matchings covering every edge, or nullopt if no 1-factorization exists.
/// Backtracking extracts a perfect matching forced to contain the
/// lowest-indexed uncovered edge, recurses on the residual.
/// Argument error if g is not regular or n is odd. n <= 64.
std::optional<Factorization> one_factorization(const Graph& g);

/// k pairwise edge-disjoint perfect matchings (not necessarily covering E),
/// or nullopt. Argument error for odd n or k < 1. n <= 64.
std::optional<Factorization> k_disjoint_perfect_matchings(const Graph& g, int k);

/// The two-stage pipeline: iterate over all k-factors of g, attempt
/// one_factorization on each, return the first success. nullopt if every
/// k-factor fails (or none exists). Never throws on parity; odd n is just
/// "none".
std::optional<Factorization> decompose_via_factor(const Graph& g, int k);

/// One line per matching: "M1: (0,1)(2,3)...".
std::string to_text(const Factorization& f);

}  // namespace factorium

#endif
