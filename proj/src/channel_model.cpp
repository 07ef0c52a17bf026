#include "cgzic/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cgzic/errors.hpp"

namespace cgzic {

double gaussian_capacity(double snr) {
    if (!std::isfinite(snr) || snr < 0.0) {
        throw DomainError("gaussian_capacity: SNR must be finite and nonnegative");
    }
    // log1p keeps relative accuracy for tiny SNR; log2 keeps powers of two exact.
    if (snr < 0.5) {
        return 0.5 * std::log1p(snr) / std::numbers::ln2;
    }
    return 0.5 * std::log2(1.0 + snr);
}

double inverse_capacity(double bits) {
    if (!std::isfinite(bits) || bits < 0.0) {
        throw DomainError("inverse_capacity: rate must be finite and nonnegative");
    }
    return std::expm1(2.0 * bits * std::numbers::ln2);
}

std::string ValidationError::message() const {
    std::ostringstream os;
    os << field;
    if (field == "a" || field == "P" || field == "d" || field == "sigma2" || field == "Q" ||
        field == "c") {
        os << '[' << index << ']';
    }
    os << ": " << reason;
    return os.str();
}

namespace {

std::optional<ValidationError> check_sizes(std::size_t k, std::size_t links, std::size_t powers) {
    if (k < 2) {
        return ValidationError{0, "K", "at least two users required"};
    }
    if (links != k - 1) {
        return ValidationError{0, "K", "length(a) != K-1"};
    }
    if (powers != k) {
        return ValidationError{0, "K", "length(P) != K"};
    }
    return std::nullopt;
}

} // namespace

std::optional<ValidationError> validate(const ChannelConfig& cfg) {
    if (auto err = check_sizes(cfg.num_users, cfg.interference.size(), cfg.power.size())) {
        return err;
    }
    for (std::size_t i = 0; i < cfg.interference.size(); ++i) {
        const double a = cfg.interference[i];
        if (!std::isfinite(a)) {
            return ValidationError{i, "a", "non-finite gain"};
        }
        if (a < 0.0) {
            return ValidationError{i, "a", "negative gain"};
        }
    }
    for (std::size_t i = 0; i < cfg.power.size(); ++i) {
        const double p = cfg.power[i];
        if (!std::isfinite(p)) {
            return ValidationError{i, "P", "non-finite power"};
        }
        if (p <= 0.0) {
            return ValidationError{i, "P", "power must be positive"};
        }
    }
    return std::nullopt;
}

void require_valid(const ChannelConfig& cfg) {
    if (auto err = validate(cfg)) {
        throw InvalidChannel("invalid channel: " + err->message());
    }
}

ChannelConfig to_standard_form(const GeneralChannel& g) {
    const std::size_t k = g.num_users;
    if (k < 2 || g.direct.size() != k || g.noise_var.size() != k || g.power.size() != k ||
        g.cross.size() != k - 1) {
        throw InvalidChannel("general channel: inconsistent vector lengths");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::isfinite(g.direct[i]) || g.direct[i] == 0.0) {
            throw InvalidChannel("general channel: degenerate direct gain d[" +
                                 std::to_string(i) + "]");
        }
        if (!std::isfinite(g.noise_var[i]) || g.noise_var[i] <= 0.0) {
            throw InvalidChannel("general channel: sigma2[" + std::to_string(i) +
                                 "] must be positive");
        }
        if (!std::isfinite(g.power[i]) || g.power[i] <= 0.0) {
            throw InvalidChannel("general channel: Q[" + std::to_string(i) +
                                 "] must be positive");
        }
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!std::isfinite(g.cross[i])) {
            throw InvalidChannel("general channel: c[" + std::to_string(i) + "] non-finite");
        }
    }

    ChannelConfig cfg;
    cfg.num_users = k;
    cfg.power.resize(k);
    cfg.interference.resize(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        cfg.power[i] = g.direct[i] * g.direct[i] * g.power[i] / g.noise_var[i];
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        cfg.interference[i] = std::abs(g.cross[i]) * std::sqrt(g.noise_var[i]) /
                              (std::abs(g.direct[i]) * std::sqrt(g.noise_var[i + 1]));
    }
    require_valid(cfg);
    return cfg;
}

bool is_very_strong_link(const ChannelConfig& cfg, std::size_t link) {
    return cfg.interference.at(link) >= std::sqrt(1.0 + cfg.power.at(link + 1));
}

} // namespace cgzic
