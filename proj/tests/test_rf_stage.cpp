// SPDX-License-Identifier: Apache-2.0

#include "fairhp/errors.hpp"
#include "fairhp/rf_stage.hpp"

#include <doctest.h>

#include <cmath>

using namespace fairhp;

namespace {

std::vector<AodSupport> supports_of(const std::vector<GroupAngularSpec>& groups) {
    std::vector<AodSupport> s;
    for (std::size_t g = 0; g < groups.size(); ++g)
        s.push_back(AodSupport::from_group(g, groups[g]));
    return s;
}

double unitarity_error(const CMatrix& f) {
    return frobenius_distance(matmul(hermitian(f), f), CMatrix::identity(f.cols()));
}

} // namespace

TEST_SUITE("rf_stage") {

TEST_CASE("grid points") {
    const QuantizedGrid g = build_grid({4, 2, 0.5});
    REQUIRE(g.lambda_x.size() == 4);
    CHECK(g.lambda_x[0] == doctest::Approx(-0.75));
    CHECK(g.lambda_x[3] == doctest::Approx(0.75));
    REQUIRE(g.lambda_y.size() == 2);
    CHECK(g.lambda_y[0] == doctest::Approx(-0.5));
    CHECK(g.lambda_y[1] == doctest::Approx(0.5));
}

TEST_CASE("grid steering vectors are orthonormal") {
    const ArrayGeometry geom{8, 4, 0.5};
    std::vector<std::vector<GridPair>> all(1);
    for (std::size_t m = 0; m < 8; ++m)
        for (std::size_t n = 0; n < 4; ++n)
            all[0].push_back({m, n});
    const RfBeamformer rf = build_rf_beamformer(all, geom);
    CHECK(rf.rf_chains() == 32);
    CHECK(unitarity_error(rf.f) < 1e-10);
}

TEST_CASE("three-group linear array gets one beam per group") {
    const ArrayGeometry geom{16, 1, 0.5};
    const std::vector<GroupAngularSpec> groups = {
        {90, 1, 55, 2, 1}, {90, 1, 85, 2, 1}, {90, 1, 135, 2, 1}};
    const auto sel = select_angle_pairs(supports_of(groups), geom, {1, 1, 1});
    REQUIRE(sel.size() == 3);
    for (const auto& s : sel)
        CHECK(s.size() == 1);
    CHECK(sel[0][0] != sel[1][0]);
    CHECK(sel[1][0] != sel[2][0]);
    const RfBeamformer rf = build_rf_beamformer(sel, geom);
    CHECK(unitarity_error(rf.f) < 1e-10);
    // Each chosen beam sits near its group's direction.
    for (std::size_t g = 0; g < 3; ++g) {
        const Gamma c = angle_to_gamma(groups[g].mean_eaod_deg, groups[g].mean_aaod_deg);
        const double lam = build_grid(geom).lambda_x[sel[g][0].m];
        CHECK(std::abs(lam - c.x) <= 1.0 / 16.0 + 0.05);
    }
}

TEST_CASE("default two-group array: eight beams each, unitary, constant modulus") {
    const ArrayGeometry geom{16, 16, 0.5};
    const std::vector<GroupAngularSpec> groups = {{50, 10, 25, 10, 5}, {50, 10, 205, 10, 5}};
    const auto supports = supports_of(groups);
    const auto sel = select_angle_pairs(supports, geom, {8, 8});
    const RfBeamformer rf = build_rf_beamformer(sel, geom);
    CHECK(rf.f.rows() == 256);
    CHECK(rf.rf_chains() == 16);
    CHECK(unitarity_error(rf.f) < 1e-10);
    double worst = 0.0;
    for (const auto& z : rf.f.data())
        worst = std::max(worst, std::abs(std::abs(z) - 1.0 / 16.0));
    CHECK(worst < 1e-12);
    for (std::size_t g = 0; g < 2; ++g)
        for (const auto& p : sel[g]) {
            CHECK(pair_covers(p, supports[g], geom));
            CHECK_FALSE(pair_covers(p, supports[1 - g], geom));
        }
}

TEST_CASE("selection keeps the closest qualifying pairs and is deterministic") {
    const ArrayGeometry geom{16, 16, 0.5};
    const auto supports = supports_of({{50, 10, 25, 10, 5}, {50, 10, 205, 10, 5}});
    const auto few = select_angle_pairs(supports, geom, {2, 2});
    const auto more = select_angle_pairs(supports, geom, {6, 6});
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(few[g][i] == more[g][i]);
    CHECK(select_angle_pairs(supports, geom, {6, 6}) == more);
}

TEST_CASE("coincident supports cannot be separated") {
    const ArrayGeometry geom{8, 8, 0.5};
    const auto supports = supports_of({{50, 10, 25, 10, 1}, {50, 10, 25, 10, 1}});
    CHECK_THROWS_AS(select_angle_pairs(supports, geom, {1, 1}), InsufficientBeamsError);
    try {
        select_angle_pairs(supports_of({{50, 10, 25, 10, 1}, {50, 10, 205, 10, 1}}), geom, {200, 1});
        FAIL("expected InsufficientBeamsError");
    } catch (const InsufficientBeamsError& e) {
        CHECK(e.requested_count() == 200);
        CHECK(e.qualifying_count() < 200);
    }
}

TEST_CASE("leakage of an own-group beam is small toward the other group") {
    const ArrayGeometry geom{16, 16, 0.5};
    const std::vector<GroupAngularSpec> groups = {{50, 10, 25, 10, 1}, {50, 10, 205, 10, 1}};
    const auto sel = select_angle_pairs(supports_of(groups), geom, {4, 4});
    const RfBeamformer rf = build_rf_beamformer(sel, geom);
    CMatrix phi(1, 256);
    const Gamma other = angle_to_gamma(50.0, 205.0);
    phi.set_row(0, phase_response(geom, other.x, other.y).span());
    CMatrix own(1, 256);
    const Gamma mine = angle_to_gamma(50.0, 25.0);
    own.set_row(0, phase_response(geom, mine.x, mine.y).span());
    const CVector f0 = rf.f.column(0);
    CHECK(leakage(phi, f0) < 0.5 * leakage(own, f0));
}

} // TEST_SUITE
