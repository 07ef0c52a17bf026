#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "cgzic/channel_model.hpp"
#include "cgzic/errors.hpp"
#include "oracles.hpp"

using namespace cgzic;
using Catch::Approx;

TEST_CASE("gaussian_capacity values") {
    CHECK(gaussian_capacity(0.0) == 0.0);
    CHECK(gaussian_capacity(3.0) == 1.0);
    CHECK(gaussian_capacity(9.75) == Approx(oracle::kC9_75).margin(1e-6));
}

TEST_CASE("gaussian_capacity rejects bad input") {
    CHECK_THROWS_AS(gaussian_capacity(-1e-9), DomainError);
    CHECK_THROWS_AS(gaussian_capacity(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(gaussian_capacity(std::nan("")), DomainError);
    CHECK_THROWS_AS(inverse_capacity(-0.5), DomainError);
}

TEST_CASE("gaussian_capacity is monotone") {
    double prev = 0.0;
    for (double x = 0.0; x < 100.0; x += 0.37) {
        const double c = gaussian_capacity(x);
        CHECK(c >= prev);
        prev = c;
    }
    // branch switch point
    CHECK(gaussian_capacity(std::nextafter(0.5, 0.0)) <= gaussian_capacity(0.5));
}

TEST_CASE("inverse_capacity values") {
    CHECK(inverse_capacity(0.0) == 0.0);
    CHECK(inverse_capacity(1.0) == Approx(3.0).epsilon(1e-15));
    CHECK(inverse_capacity(oracle::kC3over175) == Approx(3.0 / 1.75).margin(1e-4));
}

TEST_CASE("capacity round trip on [0, 60] bits") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> bits(0.0, 60.0);
    for (int n = 0; n < 5000; ++n) {
        const double y = n < 10 ? std::ldexp(1.0, -40 + 4 * n) : bits(rng);
        const double back = gaussian_capacity(inverse_capacity(y));
        CHECK(std::abs(back - y) <= 1e-9 * y);
    }
}

TEST_CASE("validate accepts and rejects") {
    CHECK_FALSE(validate({3, {0.5, 0.4}, {3, 3, 3}}));

    auto short_gain = validate({3, {0.5}, {3, 3, 3}});
    REQUIRE(short_gain);
    CHECK(short_gain->reason == "length(a) != K-1");

    auto negative = validate({2, {-0.1}, {3, 3}});
    REQUIRE(negative);
    CHECK(negative->field == "a");
    CHECK(negative->index == 0);
    CHECK(negative->reason == "negative gain");

    auto zero_power = validate({2, {0.1}, {3, 0}});
    REQUIRE(zero_power);
    CHECK(zero_power->field == "P");
    CHECK(zero_power->index == 1);

    CHECK(validate({1, {}, {3}}));
    CHECK(validate({2, {std::nan("")}, {3, 3}}));
    CHECK(validate({2, {0.5}, {3, std::numeric_limits<double>::infinity()}}));
    CHECK_THROWS_AS(require_valid({2, {0.5}, {3}}), InvalidChannel);
}

TEST_CASE("to_standard_form examples") {
    SECTION("already standard") {
        const auto cfg = to_standard_form({2, {1, 1}, {0.5}, {1, 1}, {3, 3}});
        CHECK(cfg.num_users == 2);
        CHECK(cfg.interference[0] == 0.5);
        CHECK(cfg.power == std::vector<double>{3, 3});
    }
    SECTION("scaled gains and noise") {
        const auto cfg = to_standard_form({2, {2, 1}, {1}, {1, 4}, {3, 12}});
        CHECK(cfg.interference[0] == Approx(0.25).epsilon(1e-15));
        CHECK(cfg.power[0] == Approx(12.0));
        CHECK(cfg.power[1] == Approx(3.0));
    }
    SECTION("negative direct gain") {
        const auto cfg = to_standard_form({2, {1, -1}, {0.5}, {1, 1}, {3, 3}});
        CHECK(cfg.interference[0] == 0.5);
        CHECK(cfg.power == std::vector<double>{3, 3});
    }
    SECTION("zero direct gain") {
        CHECK_THROWS_AS(to_standard_form({2, {0, 1}, {0.5}, {1, 1}, {3, 3}}), InvalidChannel);
    }
}

TEST_CASE("to_standard_form properties") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.05, 4.0);
    for (int n = 0; n < 500; ++n) {
        const std::size_t k = 2 + static_cast<std::size_t>(n % 4);
        GeneralChannel g{k, {}, {}, {}, {}};
        GeneralChannel unit{k, std::vector<double>(k, 1.0), {}, std::vector<double>(k, 1.0), {}};
        for (std::size_t i = 0; i < k; ++i) {
            g.direct.push_back((n % 2 ? -1.0 : 1.0) * u(rng));
            g.noise_var.push_back(u(rng));
            g.power.push_back(u(rng));
            unit.power.push_back(u(rng));
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            g.cross.push_back(u(rng) - 2.0);
            unit.cross.push_back(u(rng));
        }
        const ChannelConfig cfg = to_standard_form(g);
        CHECK_FALSE(validate(cfg));

        // Received SNRs are preserved.
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(cfg.power[i] ==
                  Approx(g.direct[i] * g.direct[i] * g.power[i] / g.noise_var[i]).epsilon(1e-12));
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const double inr = g.cross[i] * g.cross[i] * g.power[i] / g.noise_var[i + 1];
            CHECK(cfg.interference[i] * cfg.interference[i] * cfg.power[i] ==
                  Approx(inr).epsilon(1e-12));
        }

        const ChannelConfig same = to_standard_form(unit);
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(std::abs(same.power[i] - unit.power[i]) <= 1e-12);
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            CHECK(std::abs(same.interference[i] - unit.cross[i]) <= 1e-12);
        }
    }
}

TEST_CASE("very strong link threshold is inclusive") {
    const ChannelConfig at{2, {2.0}, {3, 3}};
    CHECK(is_very_strong_link(at, 0));
    const ChannelConfig below{2, {std::nextafter(2.0, 0.0)}, {3, 3}};
    CHECK_FALSE(is_very_strong_link(below, 0));
}
