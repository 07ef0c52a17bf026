#pragma once

// Test-only reference computations. Nothing here calls into the library's
// solver paths, so each can stand as an independent check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace oracle {

inline double cap(double x) { return 0.5 * std::log2(1.0 + x); }

// Solves the square system M y = r by Gaussian elimination with partial
// pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> m,
                                                       std::vector<double> r) {
    const std::size_t n = r.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (std::abs(m[i][c]) > std::abs(m[piv][c])) {
                piv = i;
            }
        }
        if (std::abs(m[piv][c]) < 1e-12) {
            return std::nullopt;
        }
        std::swap(m[piv], m[c]);
        std::swap(r[piv], r[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) {
                continue;
            }
            const double f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
            r[i] -= f * r[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        r[i] /= m[i][i];
    }
    return r;
}

// max sum(x) over {A x <= b, x >= 0} by enumerating every basis: choose n of
// the m + n inequalities as tight, solve, keep feasible points.
inline double vertex_enum_max_sum(const std::vector<std::vector<double>>& a,
                                  const std::vector<double>& b) {
    const std::size_t n = a.empty() ? 0 : a.front().size();
    std::vector<std::vector<double>> rows = a;
    std::vector<double> rhs = b;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<double> e(n, 0.0);
        e[v] = -1.0; // -x_v <= 0
        rows.push_back(e);
        rhs.push_back(0.0);
    }
    const std::size_t total = rows.size();
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) {
        pick[i] = i;
    }
    for (;;) {
        std::vector<std::vector<double>> m;
        std::vector<double> r;
        for (std::size_t idx : pick) {
            m.push_back(rows[idx]);
            r.push_back(rhs[idx]);
        }
        if (auto x = solve_square(m, r)) {
            bool feasible = true;
            for (std::size_t i = 0; i < total && feasible; ++i) {
                double lhs = 0.0;
                for (std::size_t v = 0; v < n; ++v) {
                    lhs += rows[i][v] * (*x)[v];
                }
                feasible = lhs <= rhs[i] + 1e-10;
            }
            if (feasible) {
                double s = 0.0;
                for (double xv : *x) {
                    s += xv;
                }
                best = std::max(best, s);
            }
        }
        // next combination
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == total - n + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return best;
}

// Frozen values computed offline with an independent double-precision script
// (direct formula evaluation, scipy HiGHS for LP optima).
inline constexpr double kC9_75 = 1.713132377351049;            // C(9.75)
inline constexpr double kC3over175 = 0.7202862956929907;       // C(3/1.75)
inline constexpr double kC6_75 = 1.4770981551934377;           // C(6.75)
inline constexpr double kNoisySum = 2.5192370739073180;        // a=(0.5,0.4), P=3
inline constexpr double kMixed2Sum = 2.5878361637752114;       // a=(1.5,0.3), P=3
inline constexpr double kStrongSum = 2.713132377351049;        // a=(1.5,1.5), P=3
inline constexpr double kMixed1Sum = 2.7202862956929907;       // a=(0.5,1.6), P=3
inline constexpr double kStrongAsym = 2.2401325610272314;      // a=(1.2,1.5), P=(1,5,2)
inline constexpr double kLemma2Total = 3.519237073907318;      // K=4 a=(0.5,0.4,1.7)
inline constexpr double kNoCutChain = 3.5033048245796925;      // K=4 a=(0.5,0.4,0.1)
inline constexpr double kNoisyH2 = 0.7559289460184544;
inline constexpr double kNoisyH3 = 0.8219949365267865;

} // namespace oracle
