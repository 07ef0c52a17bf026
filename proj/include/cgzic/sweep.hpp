#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgzic/channel_model.hpp"
#include "cgzic/hk_polytope.hpp"
#include "cgzic/tolerances.hpp"

namespace cgzic {

// Half-open axis [min, max) split into `steps` cells; cell j sits at
// min + (max - min) * j / steps.
struct AxisRange {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 0;

    double at(std::size_t j) const;
};

struct SweepSpec {
    std::array<double, 3> power{3.0, 3.0, 3.0};
    AxisRange a1;
    AxisRange a2;
    bool include_very_strong = false;
};

/// Throws std::invalid_argument when the spec is malformed or reaches the
/// very-strong threshold without include_very_strong.
void validate_sweep(const SweepSpec& spec);

struct RegimeCell {
    double a1 = 0.0;
    double a2 = 0.0;
    std::string splitting_regime;
    std::string capacity_status; // "VeryStrong" when a link is cut
    double achievable = 0.0;
    double upper = 0.0;

    bool operator==(const RegimeCell&) const = default;
};

RegimeCell evaluate_cell(const std::array<double, 3>& power, double a1, double a2,
                         double slack = tol::kRegimeSlack);

/// Row-major over (a1, a2): a1 outer, a2 inner.
std::vector<RegimeCell> regime_map_serial(const SweepSpec& spec, double slack = tol::kRegimeSlack);
std::vector<RegimeCell> regime_map(const SweepSpec& spec, double slack = tol::kRegimeSlack);

/// CSV with header a1,a2,splitting_regime,capacity_status,achievable,upper.
std::string regime_map_csv(const std::vector<RegimeCell>& cells);

// Randomized verification of the closed-form optimum against grid_oracle.
// Channels come from std::mt19937_64 seeded with `seed`; doubles are built
// from the top 53 bits of each draw, so the stream is platform independent.
struct VerifyOptions {
    std::size_t count = 0;
    std::size_t k_min = 2;
    std::size_t k_max = 3;
    double grid_step = 0.05;
    std::uint64_t seed = 0;
    double p_min = 0.1; // powers are log-uniform on [p_min, p_max]
    double p_max = 100.0;
    double tolerance = tol::kOracleViolation;
    std::size_t max_cells = tol::kMaxGridCells;
    std::optional<ChannelConfig> fixed; // evaluate this channel `count` times instead
};

std::vector<ChannelConfig> sample_channels(const VerifyOptions& opts);

struct VerifyInstance {
    ChannelConfig channel;
    OracleReport report;
    bool passed = true;
};

struct VerifyReport {
    std::vector<VerifyInstance> instances;
    double worst_max_violation = 0.0;  // 0 when no instances
    double worst_optimal_gap = 0.0;    // max |LP(optimal split) - closed form|
    std::size_t failures = 0;
    VerifyOptions options;
};

VerifyReport run_verify_serial(const VerifyOptions& opts);
/// Instances run in parallel; each grid is evaluated serially.
VerifyReport run_verify(const VerifyOptions& opts);

} // namespace cgzic
