#include "cgzic/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cgzic/tolerances.hpp"

namespace cgzic::lp {

void Problem::add_row(std::span<const double> coeffs, double bound) {
    if (coeffs.size() != num_vars) {
        throw std::invalid_argument("lp: row width does not match num_vars");
    }
    matrix.insert(matrix.end(), coeffs.begin(), coeffs.end());
    rhs.push_back(bound);
}

namespace {

class Tableau {
public:
    explicit Tableau(const Problem& p)
        : m_(p.rows()), n_(p.num_vars), width_(n_ + 1), cells_((m_ + 1) * width_),
          basic_(m_), nonbasic_(n_) {
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t j = 0; j < n_; ++j) {
                at(r, j) = p.matrix[r * n_ + j];
            }
            at(r, n_) = p.rhs[r];
            basic_[r] = n_ + r;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            at(m_, j) = -p.objective[j];
            nonbasic_[j] = j;
        }
    }

    Solution solve() {
        Solution sol;
        constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
        for (;;) {
            // Bland: smallest variable label with an improving reduced cost.
            std::size_t enter = npos;
            for (std::size_t j = 0; j < n_; ++j) {
                if (at(m_, j) < -tol::kPivot && (enter == npos || nonbasic_[j] < nonbasic_[enter])) {
                    enter = j;
                }
            }
            if (enter == npos) {
                break;
            }
            std::size_t leave = npos;
            double best = 0.0;
            for (std::size_t r = 0; r < m_; ++r) {
                const double coef = at(r, enter);
                if (coef <= tol::kPivot) {
                    continue;
                }
                const double ratio = at(r, n_) / coef;
                if (leave == npos || ratio < best - tol::kPivot ||
                    (ratio <= best + tol::kPivot && basic_[r] < basic_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == npos) {
                throw std::runtime_error("lp: objective unbounded");
            }
            pivot(leave, enter);
            ++sol.pivots;
        }

        sol.value = at(m_, n_);
        sol.x.assign(n_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
            if (basic_[r] < n_) {
                sol.x[basic_[r]] = at(r, n_);
            }
        }
        return sol;
    }

private:
    double& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }

    void pivot(std::size_t r, std::size_t s) {
        const double inv = 1.0 / at(r, s);
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r) {
                continue;
            }
            const double f = at(i, s) * inv;
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j <= n_; ++j) {
                if (j != s) {
                    at(i, j) -= f * at(r, j);
                }
            }
            at(i, s) = -f;
        }
        for (std::size_t j = 0; j <= n_; ++j) {
            if (j != s) {
                at(r, j) *= inv;
            }
        }
        at(r, s) = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<double> cells_;
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
};

} // namespace

Solution maximize(const Problem& problem) {
    if (problem.matrix.size() != problem.rows() * problem.num_vars ||
        problem.objective.size() != problem.num_vars) {
        throw std::invalid_argument("lp: inconsistent problem dimensions");
    }
    for (double b : problem.rhs) {
        if (!std::isfinite(b) || b < 0.0) {
            throw std::invalid_argument("lp: right-hand sides must be finite and nonnegative");
        }
    }
    return Tableau(problem).solve();
}

} // namespace cgzic::lp
