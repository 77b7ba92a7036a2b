#ifndef FACTORIUM_PROOF_LEDGER_HPP
#define FACTORIUM_PROOF_LEDGER_HPP

#include <string>
#include <vector>

namespace factorium {

// Two further bounds from the same derivation,
//   s >= k + (q-1)(k+2-h1) + t - 2h1 - 1   and   s >= k + 3(q-1) - h1,
// couple s, t, q, h1 through graph structure and cannot be ranged
// independently, so they have no standalone grid here; they are exercised
// indirectly by the counterexample searches turning up nothing.

/// Outcome of one mechanically verified inequality/identity, swept over its
/// feasible integer grid with exact integer arithmetic throughout.
struct LedgerResult {
    std::string check_name;
    long long grid_points_tested = 0;
    std::vector<std::string> violations;  // variable assignments, e.g. "k=3 h1=2"
    bool passed = true;

    /// "PASS <name> points=<c>" or "FAIL <name> witness=<assignment>"
    std::string to_line() const;
};

/// Over even n <= 2*k_max and k >= n/2: 3(k^2+2)+k > n and 4k+6 > n.
LedgerResult check_case1_density(long long k_max);

/// Over 1 <= k <= k_max, 0 <= h1 <= k-1: 2k^2+k-3k*h1+h1^2+h1 >= 3k.
/// Equality locations are counted, not treated as violations.
LedgerResult check_case2_chain(long long k_max);

/// Same grid: h1^2-(2k-1)h1+k^2+2k >= 3k and (k-h1)(k-h1+5) > 0.
LedgerResult check_case3_chains(long long k_max);

/// Hessian [[2,-1,-1],[-1,2,-1],[-1,-1,2]]: characteristic polynomial
/// factored exactly over the integers, eigenvalues {0,3,3}, all principal
/// minors nonnegative (positive semidefinite).
LedgerResult check_hessian();

/// Substituting h1=h2=k-1, lambda=0 into all six stationarity and
/// complementary-slackness equations yields exact zeros, with feasibility,
/// for every 1 <= k <= k_max.
LedgerResult check_kkt(long long k_max);

/// min over the integer grid 0 <= h1 <= h2 <= k-1 of
/// f = h1^2 - h1(k-1+h2) + h2^2 + (1-k)h2 + k^2 - 2k + 2 equals 1, attained
/// at (k-1, k-1), for every 1 <= k <= k_max.
LedgerResult check_qp_minimum(long long k_max);

/// For 1 <= m <= range: 3m^2 - 8m + 12 > 0 (the case bound scaled by 4),
/// plus the discriminant witness 64 - 144 < 0.
LedgerResult check_case42(long long range);

/// All checks with the given sweep bounds, in a fixed order.
std::vector<LedgerResult> run_all_checks(long long k_max = 500, long long qp_k_max = 200,
                                         long long case42_range = 1000000);

}  // namespace factorium

#endif
