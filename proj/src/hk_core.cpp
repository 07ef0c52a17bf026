#include "cgzic/hk_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgzic/errors.hpp"

namespace cgzic {

double next_effective_gain(double prev_gain, double interference, double prev_power,
                           double power) {
    const double a2 = interference * interference;
    if (interference <= prev_gain) {
        return std::sqrt(1.0 / (1.0 + a2 * prev_power));
    }
    const double h2 = prev_gain * prev_gain;
    const double ratio = ((a2 - h2) * prev_power + power) / (power + h2 * prev_power * power);
    return std::min(std::sqrt(ratio), 1.0);
}

double next_rate_case_form(double prev_gain, double interference, double prev_power,
                           double power) {
    const double a2 = interference * interference;
    if (interference <= prev_gain) {
        return gaussian_capacity(power / (1.0 + a2 * prev_power));
    }
    const double h2 = prev_gain * prev_gain;
    return std::min(gaussian_capacity(a2 * prev_power + power) - gaussian_capacity(h2 * prev_power),
                    gaussian_capacity(power));
}

EffectiveGains effective_gains(const ChannelConfig& cfg) {
    require_valid(cfg);
    const std::size_t k = cfg.num_users;
    EffectiveGains out;
    out.amplitude.resize(k);
    out.rate.resize(k);
    out.amplitude[0] = 1.0;
    for (std::size_t i = 1; i < k; ++i) {
        out.amplitude[i] = next_effective_gain(out.amplitude[i - 1], cfg.interference[i - 1],
                                               cfg.power[i - 1], cfg.power[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double h = out.amplitude[i];
        out.rate[i] = gaussian_capacity(h * h * cfg.power[i]);
    }
    return out;
}

namespace {

PowerSplit split_from_gains(const ChannelConfig& cfg, const EffectiveGains& g) {
    PowerSplit split;
    split.common_fraction.assign(cfg.num_users, 0.0);
    for (std::size_t i = 0; i + 1 < cfg.num_users; ++i) {
        split.common_fraction[i] = cfg.interference[i] > g.amplitude[i] ? 1.0 : 0.0;
    }
    return split;
}

} // namespace

PowerSplit optimal_split(const ChannelConfig& cfg) {
    return split_from_gains(cfg, effective_gains(cfg));
}

SumRateResult max_sum_rate(const ChannelConfig& cfg) {
    SumRateResult out;
    out.gains = effective_gains(cfg);
    out.split = split_from_gains(cfg, out.gains);
    for (double r : out.gains.rate) {
        out.sum_rate += r;
    }
    return out;
}

double r_star_case_form(const ChannelConfig& cfg, std::size_t user) {
    require_valid(cfg);
    if (user == 0 || user >= cfg.num_users) {
        throw std::out_of_range("r_star_case_form: user index " + std::to_string(user) +
                                " outside [1, K-1]");
    }
    const EffectiveGains g = effective_gains(cfg);
    return next_rate_case_form(g.amplitude[user - 1], cfg.interference[user - 1],
                               cfg.power[user - 1], cfg.power[user]);
}

} // namespace cgzic
