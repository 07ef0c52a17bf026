#pragma once

#include <cstddef>
#include <vector>

#include "cgzic/channel_model.hpp"

namespace cgzic {

// Effective direct-gain amplitudes and the per-user rates they induce.
// amplitude[0] == 1 and rate[i] == gaussian_capacity(amplitude[i]^2 * power[i]).
struct EffectiveGains {
    std::vector<double> amplitude;
    std::vector<double> rate;
};

// Per-user fraction of power carried by the common (cross-decodable) message.
struct PowerSplit {
    std::vector<double> common_fraction;

    std::size_t size() const { return common_fraction.size(); }
    bool operator==(const PowerSplit&) const = default;
};

struct SumRateResult {
    double sum_rate = 0.0;
    EffectiveGains gains;
    PowerSplit split; // last user's fraction pinned to 0
};

/// One step of the effective-gain recursion: amplitude of the next user given
/// the previous user's effective amplitude, the interference gain between
/// them and both powers.
double next_effective_gain(double prev_gain, double interference, double prev_power,
                           double power);

/// The same step written in rate form:
///   C(P / (1 + a^2 P_prev))                          if a <= h_prev
///   min{C(a^2 P_prev + P) - C(h_prev^2 P_prev), C(P)}  otherwise
double next_rate_case_form(double prev_gain, double interference, double prev_power,
                           double power);

EffectiveGains effective_gains(const ChannelConfig& cfg);

/// Common-only (1) when a_i > h_i, private-only (0) otherwise; ties go private.
PowerSplit optimal_split(const ChannelConfig& cfg);

/// Maximum sum rate over simple Han-Kobayashi schemes (Gaussian inputs,
/// no time sharing): sum_i C(h_i^2 P_i).
SumRateResult max_sum_rate(const ChannelConfig& cfg);

/// Case-form rate of `user` (0-based, 1 <= user < K), evaluated without going
/// through its own amplitude. Cross-check for effective_gains.
double r_star_case_form(const ChannelConfig& cfg, std::size_t user);

} // namespace cgzic
