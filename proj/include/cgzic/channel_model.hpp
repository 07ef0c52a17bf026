#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cgzic {

/// C(x) = 1/2 log2(1 + x), in bits per real channel use.
/// Throws DomainError for negative or non-finite x.
double gaussian_capacity(double snr);

/// Inverse of gaussian_capacity: 2^(2y) - 1.
double inverse_capacity(double bits);

/// Standard-form cascade Z-interference channel with unit noise.
/// Receiver 1 sees only user 1; receiver i+1 sees user i+1 plus user i
/// scaled by interference[i] (0-based).
struct ChannelConfig {
    std::size_t num_users = 0;
    std::vector<double> interference; // num_users - 1 magnitudes
    std::vector<double> power;        // num_users average power limits

    std::size_t links() const { return interference.size(); }
};

/// Channel with arbitrary direct/cross gains and noise variances.
struct GeneralChannel {
    std::size_t num_users = 0;
    std::vector<double> direct;    // d_i, nonzero
    std::vector<double> cross;     // c_i, user i into receiver i+1
    std::vector<double> noise_var; // sigma^2_i
    std::vector<double> power;     // Q_i
};

struct ValidationError {
    std::size_t index = 0; // offending element (0-based), 0 for size errors
    std::string field;
    std::string reason;

    std::string message() const;
};

/// First violated ChannelConfig invariant, if any.
std::optional<ValidationError> validate(const ChannelConfig& cfg);

/// Throws InvalidChannel carrying validate()'s message.
void require_valid(const ChannelConfig& cfg);

/// Normalizes to unit noise and unit direct gain:
///   power_i = d_i^2 Q_i / sigma2_i
///   a_i     = |c_i| sqrt(sigma2_i) / (|d_i| sqrt(sigma2_{i+1}))
ChannelConfig to_standard_form(const GeneralChannel& g);

/// a_link >= sqrt(1 + P_{link+1}): receiver link+1 can always strip the
/// interference, so the link can be cut without changing capacity.
bool is_very_strong_link(const ChannelConfig& cfg, std::size_t link);

} // namespace cgzic
