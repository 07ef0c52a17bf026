#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cgzic/channel_model.hpp"
#include "cgzic/hk_polytope.hpp"
#include "cgzic/tolerances.hpp"

namespace cgzic {

// Optimal (gamma_1, gamma_2) pattern of a 3-user channel:
// I = (1,1), II = (0,1), III = (0,0), VI = (1,0).
enum class SplittingRegime { I, II, III, VI };

enum class CapacityStatus { ExactNoisy, ExactStrong, ExactMixedI, Gap05MixedII, AchievableOnly };

std::string_view to_string(SplittingRegime r);
std::string_view to_string(CapacityStatus s);

bool is_exact(CapacityStatus s);

struct ConditionCheck {
    std::string name;
    bool holds = false;
};

struct RegimeReport {
    SplittingRegime splitting_regime = SplittingRegime::III;
    CapacityStatus capacity_status = CapacityStatus::AchievableOnly;
    double achievable = 0.0; // max simple-HK sum rate
    double upper = 0.0;      // capacity upper bound; == achievable when exact
    std::vector<ConditionCheck> conditions;
};

// Regime predicates for K = 3. `slack` loosens every inequality by that amount
// (0 evaluates the definitions exactly as written).

/// a1^2 + a2^2 (1 + a1^2 P1)^2 <= 1
bool is_noisy(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);
/// 1 <= a1 < sqrt(1+P2) and 1 <= a2 < sqrt(1+P3)
bool is_strong(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);
/// a1 < 1 and sqrt((1+P3)/(1+a1^2 P1)) <= a2 < sqrt(1+P3)
bool is_mixed1(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);
/// 1 <= a1 < sqrt(1+P2) and a2 <= sqrt(1/(1+a1^2 P1))
bool is_mixed2(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);

SplittingRegime splitting_regime(const PowerSplit& split);

/// Requires K = 3 and no very strong link (see remove_very_strong).
RegimeReport classify(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);

/// Treat-interference-as-noise sum capacity of the noisy regime.
double noisy_sum_capacity(const ChannelConfig& cfg);

struct StrongInequality {
    std::array<double, 3> coeff{};
    double rhs = 0.0;
};

// Capacity region in the strong regime, in this order:
//   R1 <= C(P1), R2 <= C(P2), R3 <= C(P3),
//   R1 <= C(a1^2 P1), R2 <= C(a2^2 P2),
//   R1 + R2 <= C(a1^2 P1 + P2), R2 + R3 <= C(a2^2 P2 + P3).
struct StrongRegion {
    std::array<StrongInequality, 7> inequalities{};

    bool contains(const std::array<double, 3>& rates) const;
    RatePolytope as_polytope() const;
};

StrongRegion strong_region(const ChannelConfig& cfg);

/// min{C(P1) + C(a2^2 P2 + P3), C(P3) + C(a1^2 P1 + P2)}
double strong_sum_capacity(const ChannelConfig& cfg);

/// C(P1) + C(P2 / (1 + a1^2 P1)) + C(P3)
double mixed1_sum_capacity(const ChannelConfig& cfg);

struct CapacityBounds {
    double achievable = 0.0;
    double upper = 0.0;
};

/// achievable = C(a1^2 P1 + P2) + C(P3 / (1 + a2^2 P2)), upper = achievable + 0.5.
CapacityBounds mixed2_bounds(const ChannelConfig& cfg);

} // namespace cgzic
