#include "cgzic/hk_polytope.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cgzic/errors.hpp"
#include "cgzic/lp.hpp"

namespace cgzic {

namespace {

struct Message {
    std::size_t var;
    double power;
};

// All nonempty subsets S of the messages: sum_{m in S} R_m <= C(sum power / noise).
template <std::size_t N>
void add_mac(RatePolytope& poly, const std::array<Message, N>& msgs, double noise) {
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        RateConstraint c;
        c.coeff.assign(poly.num_vars, 0.0);
        double power = 0.0;
        for (std::size_t m = 0; m < N; ++m) {
            if (mask & (1u << m)) {
                c.coeff[msgs[m].var] = 1.0;
                power += msgs[m].power;
            }
        }
        c.rhs = gaussian_capacity(power / noise);
        poly.constraints.push_back(std::move(c));
    }
}

void check_split(const ChannelConfig& cfg, const PowerSplit& split) {
    if (split.size() != cfg.num_users) {
        throw std::invalid_argument("power split length " + std::to_string(split.size()) +
                                    " does not match K = " + std::to_string(cfg.num_users));
    }
    for (double g : split.common_fraction) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw std::invalid_argument("power split fraction outside [0, 1]");
        }
    }
}

} // namespace

RatePolytope build_polytope(const ChannelConfig& cfg, const PowerSplit& split) {
    require_valid(cfg);
    check_split(cfg, split);
    const std::size_t k = cfg.num_users;
    const auto& g = split.common_fraction;

    RatePolytope poly;
    poly.num_vars = 2 * k;
    poly.constraints.reserve(3 + 7 * (k - 1));

    add_mac<2>(poly,
               {Message{common_var(0), g[0] * cfg.power[0]},
                Message{private_var(0), (1.0 - g[0]) * cfg.power[0]}},
               1.0);
    for (std::size_t i = 1; i < k; ++i) {
        const double cross = cfg.interference[i - 1] * cfg.interference[i - 1] * cfg.power[i - 1];
        const double noise = 1.0 + (1.0 - g[i - 1]) * cross;
        add_mac<3>(poly,
                   {Message{common_var(i - 1), g[i - 1] * cross},
                    Message{common_var(i), g[i] * cfg.power[i]},
                    Message{private_var(i), (1.0 - g[i]) * cfg.power[i]}},
                   noise);
    }
    return poly;
}

LpOptimum max_sum_lp(const RatePolytope& poly) {
    lp::Problem prob;
    prob.num_vars = poly.num_vars;
    prob.objective.assign(poly.num_vars, 1.0);
    prob.matrix.reserve(poly.constraints.size() * poly.num_vars);
    prob.rhs.reserve(poly.constraints.size());
    for (const auto& c : poly.constraints) {
        prob.add_row(c.coeff, c.rhs);
    }
    lp::Solution sol = lp::maximize(prob);
    return LpOptimum{sol.value, std::move(sol.x)};
}

SplitGrid::SplitGrid(std::size_t num_users, double step) : num_users_(num_users), step_(step) {
    if (num_users < 2) {
        throw std::invalid_argument("split grid needs at least two users");
    }
    if (!(step > 0.0 && step <= 1.0)) {
        throw std::invalid_argument("grid step must lie in (0, 1]");
    }
    const double cells = std::round(1.0 / step);
    if (std::abs(cells * step - 1.0) > 1e-9) {
        throw std::invalid_argument("grid step must divide [0, 1] into an integer number of cells");
    }
    levels_ = static_cast<std::size_t>(cells) + 1;
    size_ = 1;
    for (std::size_t d = 0; d + 1 < num_users; ++d) {
        if (size_ > std::numeric_limits<std::size_t>::max() / levels_) {
            throw ResourceError("split grid size overflows");
        }
        size_ *= levels_;
    }
}

PowerSplit SplitGrid::at(std::size_t index) const {
    PowerSplit split;
    split.common_fraction.assign(num_users_, 0.0);
    const double cells = static_cast<double>(levels_ - 1);
    for (std::size_t d = num_users_ - 1; d-- > 0;) {
        split.common_fraction[d] = static_cast<double>(index % levels_) / cells;
        index /= levels_;
    }
    return split;
}

namespace {

SplitGrid checked_grid(const ChannelConfig& cfg, double grid_step, const GridOptions& opts) {
    require_valid(cfg);
    SplitGrid grid(cfg.num_users, grid_step);
    if (grid.size() > opts.max_cells) {
        throw ResourceError("grid of " + std::to_string(grid.size()) + " points exceeds cap of " +
                            std::to_string(opts.max_cells));
    }
    return grid;
}

double lp_at(const ChannelConfig& cfg, const PowerSplit& split) {
    return max_sum_lp(build_polytope(cfg, split)).value;
}

// Shared by both kernels so the tie-break is identical: first (lexicographically
// smallest) split attaining the maximum wins.
OracleReport reduce(const ChannelConfig& cfg, const SplitGrid& grid, std::vector<double> values,
                    const GridOptions& opts) {
    const SumRateResult closed = max_sum_rate(cfg);
    OracleReport rep;
    rep.closed_form = closed.sum_rate;
    rep.grid_step = grid.step();
    rep.grid_points = grid.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    rep.best_sum = values[best];
    rep.best_split = grid.at(best);
    rep.max_violation = rep.best_sum - rep.closed_form;
    rep.optimal_split_lp = lp_at(cfg, closed.split);
    if (opts.keep_values) {
        rep.values = std::move(values);
    }
    return rep;
}

} // namespace

OracleReport grid_oracle_serial(const ChannelConfig& cfg, double grid_step,
                                const GridOptions& opts) {
    const SplitGrid grid = checked_grid(cfg, grid_step, opts);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = lp_at(cfg, grid.at(i));
    }
    return reduce(cfg, grid, std::move(values), opts);
}

OracleReport grid_oracle(const ChannelConfig& cfg, double grid_step, const GridOptions& opts) {
    const SplitGrid grid = checked_grid(cfg, grid_step, opts);
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<double> values(grid.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        values[idx] = lp_at(cfg, grid.at(idx));
    }
    return reduce(cfg, grid, std::move(values), opts);
}

} // namespace cgzic
