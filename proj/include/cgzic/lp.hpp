#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cgzic::lp {

// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0 so the origin is
// feasible. A is row-major, rows() x num_vars.
struct Problem {
    std::size_t num_vars = 0;
    std::vector<double> matrix;
    std::vector<double> rhs;
    std::vector<double> objective;

    std::size_t rows() const { return rhs.size(); }
    void add_row(std::span<const double> coeffs, double bound);
};

struct Solution {
    double value = 0.0;
    std::vector<double> x;
    std::size_t pivots = 0;
};

/// Dense primal simplex with Bland's rule. Pivot order is a pure function of
/// the input, so repeated solves are bitwise identical.
/// Throws std::invalid_argument for malformed input or negative rhs and
/// std::runtime_error if the problem is unbounded.
Solution maximize(const Problem& problem);

} // namespace cgzic::lp
