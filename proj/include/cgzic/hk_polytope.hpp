#pragma once

#include <cstddef>
#include <vector>

#include "cgzic/channel_model.hpp"
#include "cgzic/hk_core.hpp"
#include "cgzic/tolerances.hpp"

namespace cgzic {

// Achievable region of a simple HK scheme for one fixed power split.
//
// Variable 2i is user i's common rate, 2i+1 its private rate (0-based users).
// Each constraint reads  sum_{v : coeff[v] = 1} R_v <= rhs  and every
// variable is implicitly nonnegative.
struct RateConstraint {
    std::vector<double> coeff; // entries in {0, 1}
    double rhs = 0.0;
};

struct RatePolytope {
    std::size_t num_vars = 0;
    std::vector<RateConstraint> constraints;
};

inline std::size_t common_var(std::size_t user) { return 2 * user; }
inline std::size_t private_var(std::size_t user) { return 2 * user + 1; }

/// Receiver 1 decodes its own common and private messages (two-message MAC).
/// Receiver i >= 2 jointly decodes {common of i-1, common of i, private of i}
/// while treating the private part of user i-1 as noise; all seven subset
/// constraints of that three-message Gaussian MAC are emitted.
RatePolytope build_polytope(const ChannelConfig& cfg, const PowerSplit& split);

struct LpOptimum {
    double value = 0.0;
    std::vector<double> rates;
};

/// Exact maximum of the total rate over the polytope.
LpOptimum max_sum_lp(const RatePolytope& poly);

// Grid of common-power fractions {0, step, ..., 1}^(K-1) x {0}.
class SplitGrid {
public:
    SplitGrid(std::size_t num_users, double step);

    std::size_t levels() const { return levels_; }
    std::size_t size() const { return size_; }
    double step() const { return step_; }

    /// Index order is lexicographic in (gamma_1, ..., gamma_{K-1}).
    PowerSplit at(std::size_t index) const;

private:
    std::size_t num_users_;
    std::size_t levels_;
    std::size_t size_;
    double step_;
};

struct OracleReport {
    double best_sum = 0.0;
    PowerSplit best_split;
    double closed_form = 0.0;
    double max_violation = 0.0;    // max over grid of LP(gamma) - closed_form
    double optimal_split_lp = 0.0; // LP at optimal_split(cfg)
    double grid_step = 0.0;
    std::size_t grid_points = 0;
    std::vector<double> values; // per grid point, filled when requested
};

struct GridOptions {
    std::size_t max_cells = tol::kMaxGridCells;
    bool keep_values = false;
};

/// Serial reference: evaluates every grid point in index order.
OracleReport grid_oracle_serial(const ChannelConfig& cfg, double grid_step,
                                const GridOptions& opts = {});

/// OpenMP kernel; result is bitwise identical to grid_oracle_serial.
OracleReport grid_oracle(const ChannelConfig& cfg, double grid_step, const GridOptions& opts = {});

} // namespace cgzic
