#include "cgzic/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cgzic/chain_decompose.hpp"
#include "cgzic/errors.hpp"
#include "cgzic/hk_core.hpp"
#include "cgzic/regimes3.hpp"

namespace cgzic {

double AxisRange::at(std::size_t j) const {
    return min + (max - min) * static_cast<double>(j) / static_cast<double>(steps);
}

void validate_sweep(const SweepSpec& spec) {
    for (double p : spec.power) {
        if (!std::isfinite(p) || p <= 0.0) {
            throw std::invalid_argument("sweep: powers must be positive");
        }
    }
    const std::array<const AxisRange*, 2> axes{&spec.a1, &spec.a2};
    for (std::size_t d = 0; d < 2; ++d) {
        const AxisRange& ax = *axes[d];
        if (ax.steps < 1) {
            throw std::invalid_argument("sweep: axis needs at least one step");
        }
        if (!(ax.min < ax.max) || ax.min < 0.0 || !std::isfinite(ax.max)) {
            throw std::invalid_argument("sweep: axis needs 0 <= min < max");
        }
        const double top = ax.at(ax.steps - 1);
        if (!spec.include_very_strong && top >= std::sqrt(1.0 + spec.power[d + 1])) {
            throw std::invalid_argument(
                "sweep: a" + std::to_string(d + 1) +
                " reaches the very-strong threshold; pass include_very_strong to allow it");
        }
    }
}

RegimeCell evaluate_cell(const std::array<double, 3>& power, double a1, double a2, double slack) {
    const ChannelConfig cfg{3, {a1, a2}, {power[0], power[1], power[2]}};
    RegimeCell cell;
    cell.a1 = a1;
    cell.a2 = a2;
    const SumRateResult best = max_sum_rate(cfg);
    cell.splitting_regime = std::string(to_string(splitting_regime(best.split)));
    if (is_very_strong_link(cfg, 0) || is_very_strong_link(cfg, 1)) {
        // Every piece left after cutting has at most two users, so it is solved exactly.
        const Segmentation seg = decompose(cfg, slack);
        cell.capacity_status = "VeryStrong";
        cell.achievable = seg.segment_sum();
        cell.upper = seg.total.value_or(cell.achievable);
        return cell;
    }
    const RegimeReport rep = classify(cfg, slack);
    cell.capacity_status = std::string(to_string(rep.capacity_status));
    cell.achievable = rep.achievable;
    cell.upper = rep.upper;
    return cell;
}

std::vector<RegimeCell> regime_map_serial(const SweepSpec& spec, double slack) {
    validate_sweep(spec);
    std::vector<RegimeCell> cells;
    cells.reserve(spec.a1.steps * spec.a2.steps);
    for (std::size_t i = 0; i < spec.a1.steps; ++i) {
        for (std::size_t j = 0; j < spec.a2.steps; ++j) {
            cells.push_back(evaluate_cell(spec.power, spec.a1.at(i), spec.a2.at(j), slack));
        }
    }
    return cells;
}

std::vector<RegimeCell> regime_map(const SweepSpec& spec, double slack) {
    validate_sweep(spec);
    const std::size_t cols = spec.a2.steps;
    const auto n = static_cast<std::ptrdiff_t>(spec.a1.steps * cols);
    std::vector<RegimeCell> cells(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        cells[u] = evaluate_cell(spec.power, spec.a1.at(u / cols), spec.a2.at(u % cols), slack);
    }
    return cells;
}

namespace {

std::string fmt9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

std::string regime_map_csv(const std::vector<RegimeCell>& cells) {
    std::ostringstream os;
    os << "a1,a2,splitting_regime,capacity_status,achievable,upper\n";
    for (const auto& c : cells) {
        os << fmt9(c.a1) << ',' << fmt9(c.a2) << ',' << c.splitting_regime << ','
           << c.capacity_status << ',' << fmt9(c.achievable) << ',' << fmt9(c.upper) << '\n';
    }
    return os.str();
}

namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_verify_options(const VerifyOptions& opts) {
    if (opts.k_min < 2 || opts.k_max < opts.k_min) {
        throw std::invalid_argument("verify: need 2 <= k_min <= k_max");
    }
    if (!(opts.p_min > 0.0) || !(opts.p_max >= opts.p_min)) {
        throw std::invalid_argument("verify: need 0 < p_min <= p_max");
    }
    if (opts.fixed) {
        require_valid(*opts.fixed);
    }
    // Checked up front so no worker thread has to throw.
    const std::size_t widest = opts.fixed ? opts.fixed->num_users : opts.k_max;
    const SplitGrid grid(widest, opts.grid_step);
    if (grid.size() > opts.max_cells) {
        throw ResourceError("verify: grid of " + std::to_string(grid.size()) +
                            " points exceeds cap of " + std::to_string(opts.max_cells));
    }
}

VerifyInstance verify_one(const ChannelConfig& cfg, const VerifyOptions& opts) {
    VerifyInstance inst;
    inst.channel = cfg;
    GridOptions g;
    g.max_cells = opts.max_cells;
    inst.report = grid_oracle_serial(cfg, opts.grid_step, g);
    const double gap = std::abs(inst.report.optimal_split_lp - inst.report.closed_form);
    inst.passed = inst.report.max_violation <= opts.tolerance && gap <= tol::kIdentity;
    return inst;
}

VerifyReport summarize(std::vector<VerifyInstance> instances, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.options = opts;
    if (!instances.empty()) {
        rep.worst_max_violation = -std::numeric_limits<double>::infinity();
    }
    for (const auto& inst : instances) {
        const double gap = std::abs(inst.report.optimal_split_lp - inst.report.closed_form);
        rep.worst_max_violation = std::max(rep.worst_max_violation, inst.report.max_violation);
        rep.worst_optimal_gap = std::max(rep.worst_optimal_gap, gap);
        if (!inst.passed) {
            ++rep.failures;
        }
    }
    rep.instances = std::move(instances);
    return rep;
}

} // namespace

std::vector<ChannelConfig> sample_channels(const VerifyOptions& opts) {
    check_verify_options(opts);
    std::vector<ChannelConfig> out;
    out.reserve(opts.count);
    if (opts.fixed) {
        out.assign(opts.count, *opts.fixed);
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    const double log_lo = std::log(opts.p_min);
    const double log_hi = std::log(opts.p_max);
    const std::uint64_t k_span = opts.k_max - opts.k_min + 1;
    for (std::size_t n = 0; n < opts.count; ++n) {
        ChannelConfig cfg;
        cfg.num_users = opts.k_min + static_cast<std::size_t>(rng() % k_span);
        cfg.power.resize(cfg.num_users);
        cfg.interference.resize(cfg.num_users - 1);
        for (double& p : cfg.power) {
            p = std::exp(log_lo + (log_hi - log_lo) * unit_draw(rng));
        }
        for (std::size_t i = 0; i + 1 < cfg.num_users; ++i) {
            cfg.interference[i] = unit_draw(rng) * std::sqrt(1.0 + cfg.power[i + 1]);
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

VerifyReport run_verify_serial(const VerifyOptions& opts) {
    const std::vector<ChannelConfig> channels = sample_channels(opts);
    std::vector<VerifyInstance> instances;
    instances.reserve(channels.size());
    for (const auto& cfg : channels) {
        instances.push_back(verify_one(cfg, opts));
    }
    return summarize(std::move(instances), opts);
}

VerifyReport run_verify(const VerifyOptions& opts) {
    const std::vector<ChannelConfig> channels = sample_channels(opts);
    std::vector<VerifyInstance> instances(channels.size());
    const auto n = static_cast<std::ptrdiff_t>(channels.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        instances[u] = verify_one(channels[u], opts);
    }
    return summarize(std::move(instances), opts);
}

} // namespace cgzic
