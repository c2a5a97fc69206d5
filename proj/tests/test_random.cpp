// SPDX-License-Identifier: Apache-2.0

#include "fairhp/random.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace fairhp;

TEST_SUITE("random") {

TEST_CASE("child streams are reproducible and distinct") {
    Rng a = Rng::child(42, 3, "channel");
    Rng b = Rng::child(42, 3, "channel");
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u64() == b.next_u64());
    std::set<std::uint64_t> seeds;
    for (std::uint64_t idx = 0; idx < 50; ++idx)
        for (const char* tag : {"placement", "channel", "opt:pso:0:30"})
            seeds.insert(derive_seed(42, idx, tag));
    CHECK(seeds.size() == 150);
    CHECK(derive_seed(1, 0, "x") != derive_seed(2, 0, "x"));
}

TEST_CASE("uniform and normal moments") {
    Rng rng(123);
    const int n = 200000;
    double su = 0, sn = 0, sn2 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK_UNARY(u >= 0.0);
        CHECK_UNARY(u < 1.0);
        su += u;
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
    }
    CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::abs(sn / n) < 0.01);
    CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("below stays in range and hits every value") {
    Rng rng(5);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

} // TEST_SUITE
