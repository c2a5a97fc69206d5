// SPDX-License-Identifier: Apache-2.0

#include "fairhp/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace fairhp;

TEST_SUITE("metrics") {

TEST_CASE("power conversions") {
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0));
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3));
    CHECK(watts_to_dbm(dbm_to_watts(17.3)) == doctest::Approx(17.3));
    CHECK(watts_to_dbm(noise_power_watts(-174.0, 120e3)) == doctest::Approx(-123.2082).epsilon(1e-6));
}

TEST_CASE("Jain index bounds and scale invariance") {
    const std::vector<double> equal = {2.0, 2.0, 2.0, 2.0};
    CHECK(*jain_index(equal) == doctest::Approx(1.0));
    const std::vector<double> one = {0.0, 0.0, 3.0, 0.0};
    CHECK(*jain_index(one) == doctest::Approx(0.25));
    const std::vector<double> r = {0.3, 1.2, 4.4};
    std::vector<double> scaled = r;
    for (auto& x : scaled)
        x *= 7.5;
    const double j = *jain_index(r);
    CHECK(j >= 1.0 / 3.0);
    CHECK(j <= 1.0);
    CHECK(std::abs(*jain_index(scaled) - j) < 1e-15);
    CHECK_FALSE(jain_index(std::vector<double>{0.0, 0.0}).has_value());
    CHECK_THROWS_AS(jain_index({}), std::invalid_argument);
}

TEST_CASE("sum rate, gap and energy efficiency") {
    const std::vector<double> r = {1.5, 4.0, 2.5};
    CHECK(sum_rate(r) == 8.0);
    CHECK(rate_gap(r) == 2.5);
    CHECK(energy_efficiency(20.0, 1.0, 16) == 20.0 / 5.0);
    const MetricRecord m = make_metric_record(r, 1.0, 4, 0.25);
    CHECK(m.energy_efficiency == 8.0 / 2.0);
    CHECK(m.per_ue_rates == r);
    CHECK_THROWS_AS(energy_efficiency(1.0, 0.0, 0), std::invalid_argument);
}

} // TEST_SUITE
