#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cgzic/errors.hpp"
#include "cgzic/regimes3.hpp"
#include "cgzic/sweep.hpp"
#include "oracles.hpp"

using namespace cgzic;
using Catch::Approx;

namespace {

SweepSpec spec(std::size_t steps) {
    SweepSpec s;
    s.a1 = {0.0, 2.0, steps};
    s.a2 = {0.0, 2.0, steps};
    return s;
}

} // namespace

TEST_CASE("axis cells are half open") {
    const AxisRange ax{0.0, 2.0, 4};
    CHECK(ax.at(0) == 0.0);
    CHECK(ax.at(1) == 0.5);
    CHECK(ax.at(3) == 1.5);
}

TEST_CASE("sweep validation") {
    CHECK_NOTHROW(validate_sweep(spec(100)));
    CHECK_NOTHROW(validate_sweep(spec(1)));
    CHECK_THROWS_AS(validate_sweep(spec(0)), std::invalid_argument);

    auto reversed = spec(10);
    reversed.a1 = {1.0, 0.5, 10};
    CHECK_THROWS_AS(validate_sweep(reversed), std::invalid_argument);

    auto negative = spec(10);
    negative.a2 = {-0.5, 1.0, 10};
    CHECK_THROWS_AS(validate_sweep(negative), std::invalid_argument);

    // Top cell at 2.5 * 9 / 10 = 2.25 reaches sqrt(1 + P) = 2.
    auto deep = spec(10);
    deep.a1 = {0.0, 2.5, 10};
    CHECK_THROWS_AS(validate_sweep(deep), std::invalid_argument);
    deep.include_very_strong = true;
    CHECK_NOTHROW(validate_sweep(deep));
}

TEST_CASE("serial and parallel regime maps agree") {
    const auto s = spec(60);
    const auto serial = regime_map_serial(s);
    const auto parallel = regime_map(s);
    REQUIRE(serial.size() == 3600);
    CHECK(serial == parallel);
}

TEST_CASE("regime map cells") {
    const auto cells = regime_map(spec(100));
    REQUIRE(cells.size() == 10000);
    // Row-major, a1 outer.
    CHECK(cells[1].a1 == 0.0);
    CHECK(cells[1].a2 == 0.02);
    CHECK(cells[100].a1 == 0.02);

    const auto& noisy = cells[25 * 100 + 20]; // (0.5, 0.4)
    CHECK(noisy.capacity_status == "ExactNoisy");
    CHECK(noisy.splitting_regime == "III");
    CHECK(noisy.achievable == Approx(oracle::kNoisySum).margin(1e-12));

    const auto& strong = cells[75 * 100 + 75]; // (1.5, 1.5)
    CHECK(strong.capacity_status == "ExactStrong");
    CHECK(strong.splitting_regime == "I");
    CHECK(strong.achievable == Approx(oracle::kStrongSum).margin(1e-12));

    for (std::size_t j = 0; j < 100; ++j) {
        const auto& c = cells[j]; // a1 = 0 column
        CHECK((c.splitting_regime == "II" || c.splitting_regime == "III"));
        CHECK(c.achievable <= c.upper);
    }
}

TEST_CASE("map cells match classify") {
    const auto cells = regime_map(spec(25));
    for (const auto& c : cells) {
        const auto rep = classify({3, {c.a1, c.a2}, {3, 3, 3}});
        CHECK(c.capacity_status == to_string(rep.capacity_status));
        CHECK(c.splitting_regime == to_string(rep.splitting_regime));
        CHECK(c.achievable == rep.achievable);
        CHECK(c.upper == rep.upper);
    }
}

TEST_CASE("single cell map and very strong cells") {
    auto one = spec(1);
    const auto cells = regime_map(one);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].a1 == 0.0);
    CHECK(cells[0].a2 == 0.0);
    CHECK(cells[0].achievable == 3.0);

    const auto vs = evaluate_cell({3, 3, 3}, 2.5, 0.4);
    CHECK(vs.capacity_status == "VeryStrong");
    CHECK(vs.achievable <= vs.upper);
}

TEST_CASE("regime map csv") {
    const auto csv = regime_map_csv(regime_map(spec(2)));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a1,a2,splitting_regime,capacity_status,achievable,upper");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("channel sampling is deterministic") {
    VerifyOptions opts;
    opts.count = 50;
    opts.k_min = 2;
    opts.k_max = 5;
    opts.seed = 7;
    const auto a = sample_channels(opts);
    const auto b = sample_channels(opts);
    REQUIRE(a.size() == 50);
    bool saw_five = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].num_users == b[i].num_users);
        CHECK(a[i].interference == b[i].interference);
        CHECK(a[i].power == b[i].power);
        CHECK(a[i].num_users >= 2);
        CHECK(a[i].num_users <= 5);
        saw_five = saw_five || a[i].num_users == 5;
        for (double p : a[i].power) {
            CHECK(p >= 0.1);
            CHECK(p <= 100.0);
        }
        for (std::size_t l = 0; l + 1 < a[i].num_users; ++l) {
            CHECK(a[i].interference[l] < std::sqrt(1.0 + a[i].power[l + 1]));
        }
    }
    CHECK(saw_five);
    opts.seed = 8;
    CHECK(sample_channels(opts)[0].power != a[0].power);
}

TEST_CASE("verify runs") {
    VerifyOptions opts;
    opts.count = 12;
    opts.k_min = 2;
    opts.k_max = 2;
    opts.grid_step = 0.1;
    opts.seed = 3;
    const auto serial = run_verify_serial(opts);
    const auto parallel = run_verify(opts);
    REQUIRE(serial.instances.size() == 12);
    CHECK(serial.failures == 0);
    CHECK(serial.worst_max_violation <= 1e-6);
    CHECK(serial.worst_optimal_gap <= 1e-9);
    CHECK(parallel.worst_max_violation == serial.worst_max_violation);
    CHECK(parallel.failures == serial.failures);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(parallel.instances[i].report.best_sum == serial.instances[i].report.best_sum);
    }
}

TEST_CASE("verify edge cases") {
    VerifyOptions empty;
    empty.count = 0;
    const auto none = run_verify(empty);
    CHECK(none.instances.empty());
    CHECK(none.failures == 0);
    CHECK(none.worst_max_violation == 0.0);

    VerifyOptions fixed;
    fixed.count = 1;
    fixed.fixed = ChannelConfig{2, {0.5}, {3, 3}};
    const auto one = run_verify(fixed);
    REQUIRE(one.instances.size() == 1);
    CHECK(one.instances[0].passed);
    CHECK(one.instances[0].report.best_split.common_fraction[0] == 0.0);

    VerifyOptions huge;
    huge.count = 1;
    huge.k_min = huge.k_max = 8;
    huge.grid_step = 0.01;
    CHECK_THROWS_AS(run_verify(huge), ResourceError);

    VerifyOptions bad;
    bad.count = 1;
    bad.k_min = 4;
    bad.k_max = 3;
    CHECK_THROWS(run_verify(bad));
}
