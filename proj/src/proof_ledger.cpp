#include "factorium/proof_ledger.hpp"

#include <array>

namespace factorium {

namespace {

using i64 = long long;

void record(LedgerResult& r, bool ok, const std::string& witness) {
    ++r.grid_points_tested;
    if (!ok) {
        r.violations.push_back(witness);
        r.passed = false;
    }
}

std::string kv(const char* name, i64 value) {
    return std::string(name) + "=" + std::to_string(value);
}

}  // namespace

std::string LedgerResult::to_line() const {
    if (passed) return "PASS " + check_name + " points=" + std::to_string(grid_points_tested);
    return "FAIL " + check_name + " witness=" + violations.front();
}

LedgerResult check_case1_density(i64 k_max) {
    LedgerResult r;
    r.check_name = "case1-density";
    for (i64 k = 1; k <= k_max; ++k)
        for (i64 n = 2; n <= 2 * k; n += 2) {
            bool ok = 3 * (k * k + 2) + k > n && 4 * k + 6 > n;
            record(r, ok, kv("k", k) + " " + kv("n", n));
        }
    return r;
}

LedgerResult check_case2_chain(i64 k_max) {
    LedgerResult r;
    r.check_name = "case2-chain";
    for (i64 k = 1; k <= k_max; ++k)
        for (i64 h1 = 0; h1 <= k - 1; ++h1) {
            i64 value = 2 * k * k + k - 3 * k * h1 + h1 * h1 + h1;
            record(r, value >= 3 * k, kv("k", k) + " " + kv("h1", h1) + " " + kv("value", value));
        }
    return r;
}

LedgerResult check_case3_chains(i64 k_max) {
    LedgerResult r;
    r.check_name = "case3-chains";
    for (i64 k = 1; k <= k_max; ++k)
        for (i64 h1 = 0; h1 <= k - 1; ++h1) {
            i64 claim9 = h1 * h1 - (2 * k - 1) * h1 + k * k + 2 * k;
            i64 tail = (k - h1) * (k - h1 + 5);
            bool ok = claim9 >= 3 * k && tail > 0;
            record(r, ok, kv("k", k) + " " + kv("h1", h1));
        }
    return r;
}

LedgerResult check_hessian() {
    LedgerResult r;
    r.check_name = "hessian";
    constexpr std::array<std::array<i64, 3>, 3> M = {{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};

    i64 trace = M[0][0] + M[1][1] + M[2][2];
    i64 minors2 = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) +
                  (M[0][0] * M[2][2] - M[0][2] * M[2][0]) +
                  (M[1][1] * M[2][2] - M[1][2] * M[2][1]);
    i64 det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);

    // char(x) = x^3 - trace x^2 + minors2 x - det; eigenvalues {0,3,3} iff it
    // equals x(x-3)^2 = x^3 - 6x^2 + 9x
    record(r, trace == 6, kv("trace", trace));
    record(r, minors2 == 9, kv("sum-2x2-minors", minors2));
    record(r, det == 0, kv("det", det));
    for (i64 x = -10; x <= 10; ++x) {
        i64 charpoly = x * x * x - trace * x * x + minors2 * x - det;
        i64 factored = x * (x - 3) * (x - 3);
        record(r, charpoly == factored, kv("x", x));
    }
    // positive semidefiniteness via principal minors
    for (int i = 0; i < 3; ++i) record(r, M[i][i] >= 0, kv("diag", i));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            i64 minor = M[i][i] * M[j][j] - M[i][j] * M[j][i];
            record(r, minor >= 0, kv("minor2", i * 3 + j));
        }
    record(r, det >= 0, kv("minor3", det));
    return r;
}

LedgerResult check_kkt(i64 k_max) {
    LedgerResult r;
    r.check_name = "kkt";
    for (i64 k = 1; k <= k_max; ++k) {
        i64 h1 = k - 1, h2 = k - 1;
        i64 l1 = 0, l2 = 0, l3 = 0;
        std::array<i64, 6> residual = {
            2 * h1 - (k - 1 + h2) + l1 - l3,
            -h1 + 2 * h2 + (-k + 1) - l1 + l2,
            -h1 - h2 + 2 * k - 2 - l2,
            l1 * (h1 - h2),
            l2 * (h2 - k + 1),
            l3 * h1,
        };
        bool stationary = true;
        for (i64 res : residual) stationary = stationary && res == 0;
        bool feasible = h1 - h2 <= 0 && h2 - (k - 1) <= 0 && -h1 <= 0;
        bool multipliers = l1 >= 0 && l2 >= 0 && l3 >= 0;
        record(r, stationary && feasible && multipliers, kv("k", k));
    }
    return r;
}

namespace {

i64 qp_objective(i64 h1, i64 h2, i64 k) {
    return h1 * h1 - h1 * (k - 1 + h2) + h2 * h2 + (1 - k) * h2 + k * k - 2 * k + 2;
}

}  // namespace

LedgerResult check_qp_minimum(i64 k_max) {
    LedgerResult r;
    r.check_name = "qp-minimum";
    for (i64 k = 1; k <= k_max; ++k) {
        i64 best = qp_objective(0, 0, k);
        i64 best_h1 = 0, best_h2 = 0;
        for (i64 h2 = 0; h2 <= k - 1; ++h2)
            for (i64 h1 = 0; h1 <= h2; ++h1) {
                i64 v = qp_objective(h1, h2, k);
                if (v < best) {
                    best = v;
                    best_h1 = h1;
                    best_h2 = h2;
                }
            }
        bool ok = best == 1 && qp_objective(k - 1, k - 1, k) == best;
        record(r, ok, kv("k", k) + " " + kv("min", best) + " " + kv("h1", best_h1) + " " +
                          kv("h2", best_h2));
    }
    return r;
}

LedgerResult check_case42(i64 range) {
    LedgerResult r;
    r.check_name = "case42";
    for (i64 m = 1; m <= range; ++m)
        record(r, 3 * m * m - 8 * m + 12 > 0, kv("m", m));
    // no real roots: discriminant of 3m^2-8m+12
    record(r, 8 * 8 - 4 * 3 * 12 < 0, "discriminant");
    return r;
}

std::vector<LedgerResult> run_all_checks(i64 k_max, i64 qp_k_max, i64 case42_range) {
    return {
        check_case1_density(k_max), check_case2_chain(k_max), check_case3_chains(k_max),
        check_hessian(),            check_kkt(k_max),         check_qp_minimum(qp_k_max),
        check_case42(case42_range),
    };
}

}  // namespace factorium
