#include "cgzic/regimes3.hpp"

#include <cmath>
#include <string>

#include "cgzic/errors.hpp"
#include "cgzic/hk_core.hpp"

namespace cgzic {

std::string_view to_string(SplittingRegime r) {
    switch (r) {
    case SplittingRegime::I: return "I";
    case SplittingRegime::II: return "II";
    case SplittingRegime::III: return "III";
    case SplittingRegime::VI: return "VI";
    }
    return "?";
}

std::string_view to_string(CapacityStatus s) {
    switch (s) {
    case CapacityStatus::ExactNoisy: return "ExactNoisy";
    case CapacityStatus::ExactStrong: return "ExactStrong";
    case CapacityStatus::ExactMixedI: return "ExactMixedI";
    case CapacityStatus::Gap05MixedII: return "Gap05MixedII";
    case CapacityStatus::AchievableOnly: return "AchievableOnly";
    }
    return "?";
}

bool is_exact(CapacityStatus s) {
    return s == CapacityStatus::ExactNoisy || s == CapacityStatus::ExactStrong ||
           s == CapacityStatus::ExactMixedI;
}

namespace {

void require_three_users(const ChannelConfig& cfg) {
    require_valid(cfg);
    if (cfg.num_users != 3) {
        throw InvalidChannel("regime analysis needs K = 3, got K = " +
                             std::to_string(cfg.num_users));
    }
}

// Slack-loosened comparisons.
bool le(double lhs, double rhs, double slack) { return lhs <= rhs + slack; }
bool lt(double lhs, double rhs, double slack) { return lhs < rhs + slack; }
bool ge(double lhs, double rhs, double slack) { return lhs >= rhs - slack; }

struct Params {
    double a1, a2, p1, p2, p3;
};

Params params(const ChannelConfig& cfg) {
    require_three_users(cfg);
    return {cfg.interference[0], cfg.interference[1], cfg.power[0], cfg.power[1], cfg.power[2]};
}

} // namespace

bool is_noisy(const ChannelConfig& cfg, double slack) {
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    const double spread = 1.0 + a1 * a1 * p1;
    return le(a1 * a1 + a2 * a2 * spread * spread, 1.0, slack);
}

bool is_strong(const ChannelConfig& cfg, double slack) {
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return ge(a1, 1.0, slack) && lt(a1, std::sqrt(1.0 + p2), slack) && ge(a2, 1.0, slack) &&
           lt(a2, std::sqrt(1.0 + p3), slack);
}

bool is_mixed1(const ChannelConfig& cfg, double slack) {
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return lt(a1, 1.0, slack) && ge(a2, std::sqrt((1.0 + p3) / (1.0 + a1 * a1 * p1)), slack) &&
           lt(a2, std::sqrt(1.0 + p3), slack);
}

bool is_mixed2(const ChannelConfig& cfg, double slack) {
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return ge(a1, 1.0, slack) && lt(a1, std::sqrt(1.0 + p2), slack) &&
           le(a2, std::sqrt(1.0 / (1.0 + a1 * a1 * p1)), slack);
}

SplittingRegime splitting_regime(const PowerSplit& split) {
    const bool first = split.common_fraction.at(0) > 0.5;
    const bool second = split.common_fraction.at(1) > 0.5;
    if (first) {
        return second ? SplittingRegime::I : SplittingRegime::VI;
    }
    return second ? SplittingRegime::II : SplittingRegime::III;
}

RegimeReport classify(const ChannelConfig& cfg, double slack) {
    require_three_users(cfg);
    for (std::size_t link = 0; link < 2; ++link) {
        if (is_very_strong_link(cfg, link)) {
            throw RegimeError("classify: link " + std::to_string(link + 1) +
                              " is very strong; remove it first");
        }
    }

    RegimeReport rep;
    const SumRateResult best = max_sum_rate(cfg);
    rep.splitting_regime = splitting_regime(best.split);
    rep.achievable = best.sum_rate;

    const bool noisy = is_noisy(cfg, slack);
    const bool strong = is_strong(cfg, slack);
    const bool mixed1 = is_mixed1(cfg, slack);
    const bool mixed2 = is_mixed2(cfg, slack);
    rep.conditions = {{"noisy", noisy}, {"strong", strong}, {"mixed_I", mixed1}, {"mixed_II", mixed2}};

    if (noisy) {
        rep.capacity_status = CapacityStatus::ExactNoisy;
    } else if (strong) {
        rep.capacity_status = CapacityStatus::ExactStrong;
    } else if (mixed1) {
        rep.capacity_status = CapacityStatus::ExactMixedI;
    } else if (mixed2) {
        rep.capacity_status = CapacityStatus::Gap05MixedII;
    } else {
        rep.capacity_status = CapacityStatus::AchievableOnly;
    }

    if (is_exact(rep.capacity_status)) {
        rep.upper = rep.achievable;
    } else if (rep.capacity_status == CapacityStatus::Gap05MixedII) {
        rep.upper = rep.achievable + 0.5;
    } else {
        // Interference-free cut-set bound; no regime result applies here.
        rep.upper = 0.0;
        for (double p : cfg.power) {
            rep.upper += gaussian_capacity(p);
        }
    }
    return rep;
}

double noisy_sum_capacity(const ChannelConfig& cfg) {
    if (!is_noisy(cfg, 0.0)) {
        throw RegimeError("noisy_sum_capacity: a1^2 + a2^2 (1 + a1^2 P1)^2 <= 1 violated");
    }
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return gaussian_capacity(p1) + gaussian_capacity(p2 / (1.0 + a1 * a1 * p1)) +
           gaussian_capacity(p3 / (1.0 + a2 * a2 * p2));
}

bool StrongRegion::contains(const std::array<double, 3>& rates) const {
    for (double r : rates) {
        if (r < 0.0) {
            return false;
        }
    }
    for (const auto& ineq : inequalities) {
        double lhs = 0.0;
        for (std::size_t v = 0; v < 3; ++v) {
            lhs += ineq.coeff[v] * rates[v];
        }
        if (lhs > ineq.rhs) {
            return false;
        }
    }
    return true;
}

RatePolytope StrongRegion::as_polytope() const {
    RatePolytope poly;
    poly.num_vars = 3;
    for (const auto& ineq : inequalities) {
        poly.constraints.push_back({{ineq.coeff.begin(), ineq.coeff.end()}, ineq.rhs});
    }
    return poly;
}

StrongRegion strong_region(const ChannelConfig& cfg) {
    if (!is_strong(cfg, 0.0)) {
        throw RegimeError("strong_region: channel is not in the strong regime");
    }
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    const double x1 = a1 * a1 * p1;
    const double x2 = a2 * a2 * p2;
    StrongRegion region;
    region.inequalities = {{
        {{1, 0, 0}, gaussian_capacity(p1)},
        {{0, 1, 0}, gaussian_capacity(p2)},
        {{0, 0, 1}, gaussian_capacity(p3)},
        {{1, 0, 0}, gaussian_capacity(x1)},
        {{0, 1, 0}, gaussian_capacity(x2)},
        {{1, 1, 0}, gaussian_capacity(x1 + p2)},
        {{0, 1, 1}, gaussian_capacity(x2 + p3)},
    }};
    return region;
}

double strong_sum_capacity(const ChannelConfig& cfg) {
    if (!is_strong(cfg, 0.0)) {
        throw RegimeError("strong_sum_capacity: channel is not in the strong regime");
    }
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return std::min(gaussian_capacity(p1) + gaussian_capacity(a2 * a2 * p2 + p3),
                    gaussian_capacity(p3) + gaussian_capacity(a1 * a1 * p1 + p2));
}

double mixed1_sum_capacity(const ChannelConfig& cfg) {
    if (!is_mixed1(cfg, 0.0)) {
        throw RegimeError("mixed1_sum_capacity: channel is not in mixed regime I");
    }
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    return gaussian_capacity(p1) + gaussian_capacity(p2 / (1.0 + a1 * a1 * p1)) +
           gaussian_capacity(p3);
}

CapacityBounds mixed2_bounds(const ChannelConfig& cfg) {
    if (!is_mixed2(cfg, 0.0)) {
        throw RegimeError("mixed2_bounds: channel is not in mixed regime II");
    }
    const auto [a1, a2, p1, p2, p3] = params(cfg);
    CapacityBounds b;
    b.achievable =
        gaussian_capacity(a1 * a1 * p1 + p2) + gaussian_capacity(p3 / (1.0 + a2 * a2 * p2));
    b.upper = b.achievable + 0.5;
    return b;
}

} // namespace cgzic
