#pragma once

#include <cstddef>

namespace cgzic::tol {

// Slack added to the right-hand side of every regime / very-strong threshold.
// Zero means the inequalities are evaluated exactly as written.
inline constexpr double kRegimeSlack = 0.0;

// Pivot and ratio-test threshold of the simplex solver.
inline constexpr double kPivot = 1e-12;

// Allowed excess of a grid LP value over the closed-form optimum.
inline constexpr double kOracleViolation = 1e-6;

// Agreement required between two exact routes to the same quantity.
inline constexpr double kIdentity = 1e-9;

// Default cap on the number of grid points grid_oracle will enumerate.
inline constexpr std::size_t kMaxGridCells = std::size_t{1} << 22;

} // namespace cgzic::tol
