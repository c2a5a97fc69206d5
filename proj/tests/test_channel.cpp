// SPDX-License-Identifier: Apache-2.0

#include "fairhp/channel.hpp"
#include "fairhp/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fairhp;

namespace {

ChannelModel two_group_model() {
    ChannelModel m;
    m.array = {4, 4, 0.5};
    m.groups = {GroupAngularSpec{50, 10, 25, 10, 2}, GroupAngularSpec{50, 10, 205, 10, 3}};
    m.n_paths = 6;
    return m;
}

} // namespace

TEST_SUITE("channel") {

TEST_CASE("angle to gamma") {
    const Gamma g = angle_to_gamma(90.0, 0.0);
    CHECK(g.x == doctest::Approx(1.0));
    CHECK(std::abs(g.y) < 1e-15);
    const Gamma h = angle_to_gamma(30.0, 90.0);
    CHECK(std::abs(h.x) < 1e-15);
    CHECK(h.y == doctest::Approx(0.5));
}

TEST_CASE("phase response matches the direct element formula") {
    const ArrayGeometry geom{5, 3, 0.5};
    const double gx = 0.31, gy = -0.72;
    const CVector a = phase_response(geom, gx, gy);
    REQUIRE(a.size() == 15);
    for (std::size_t mx = 0; mx < 5; ++mx)
        for (std::size_t my = 0; my < 3; ++my) {
            const double phase = -2.0 * std::numbers::pi * 0.5 * (gx * mx + gy * my);
            CHECK(std::abs(a[mx * 3 + my] - std::polar(1.0, phase)) < 1e-12);
        }
}

TEST_CASE("steering vectors have unit norm and constant modulus") {
    const ArrayGeometry geom{8, 8, 0.5};
    const CVector e = steering_vector(geom, 0.2, 0.6);
    CHECK(norm2(e.span()) == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& z : e)
        CHECK(std::abs(z) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("gamma outside the visible region is a domain error") {
    const ArrayGeometry geom{4, 4, 0.5};
    CHECK_THROWS_AS(phase_response(geom, 1.01, 0.0), DomainError);
    CHECK_NOTHROW(phase_response(geom, 1.0 + 1e-13, 0.0));
}

TEST_CASE("placement respects bounds") {
    Rng rng(3);
    const GeometryBounds b;
    for (int i = 0; i < 1000; ++i) {
        const UePlacement p = draw_placement(rng, b);
        CHECK(p.horizontal_distance_m >= 10.0);
        CHECK(p.horizontal_distance_m <= 100.0);
        CHECK(p.ue_height_m >= 1.5);
        CHECK(p.ue_height_m <= 2.5);
        const double dh = p.bs_height_m - p.ue_height_m;
        CHECK(p.distance_3d_m == doctest::Approx(std::hypot(p.horizontal_distance_m, dh)));
    }
    CHECK_THROWS_AS(UePlacement::make(0.0, 2.0, 2.0), DomainError);
}

TEST_CASE("distance gain conventions") {
    ChannelModel m;
    m.pathloss_exponent = 3.76;
    CHECK(distance_gain(m, 50.0) == doctest::Approx(std::pow(50.0, -3.76)));
    m.pathloss_convention = PathlossConvention::power;
    CHECK(distance_gain(m, 50.0) == doctest::Approx(std::pow(50.0, -1.88)));
}

TEST_CASE("assembled channel equals the explicit path sum") {
    const ChannelModel m = two_group_model();
    Rng rng(9);
    std::vector<UePlacement> pl;
    for (int k = 0; k < 5; ++k)
        pl.push_back(draw_placement(rng, {}));
    const ChannelRealization ch = generate_channel(m, pl, rng);
    REQUIRE(ch.h.rows() == 5);
    REQUIRE(ch.h.cols() == 16);

    for (std::size_t k = 0; k < 5; ++k) {
        const std::size_t g = m.group_of(k);
        const std::size_t i = k - m.first_ue(g);
        for (std::size_t a = 0; a < 16; ++a) {
            const std::size_t mx = a / 4, my = a % 4;
            Complex sum = 0.0;
            for (std::size_t l = 0; l < m.n_paths; ++l) {
                const auto& p = ch.path_angles[k][l];
                const double th = p.eaod_deg * std::numbers::pi / 180.0;
                const double ps = p.aaod_deg * std::numbers::pi / 180.0;
                const double gx = std::sin(th) * std::cos(ps), gy = std::sin(th) * std::sin(ps);
                sum += ch.per_group[g].z(i, l) * std::polar(1.0, -std::numbers::pi * (gx * mx + gy * my));
            }
            CHECK(std::abs(sum - ch.h(k, a)) < 1e-12 * (1.0 + std::abs(sum)));
        }
    }
}

TEST_CASE("group factorization and shared path angles") {
    const ChannelModel m = two_group_model();
    Rng rng(10);
    std::vector<UePlacement> pl(5, UePlacement::make(40.0, 10.0, 2.0));
    const ChannelRealization ch = generate_channel(m, pl, rng);
    for (std::size_t g = 0; g < 2; ++g) {
        const auto& f = ch.per_group[g];
        const CMatrix hg = matmul(f.z, f.phi);
        for (std::size_t i = 0; i < hg.rows(); ++i)
            for (std::size_t a = 0; a < hg.cols(); ++a)
                CHECK(hg(i, a) == ch.h(m.first_ue(g) + i, a));
        const std::size_t k0 = m.first_ue(g);
        for (std::size_t i = 1; i < m.groups[g].ue_count; ++i)
            for (std::size_t l = 0; l < m.n_paths; ++l)
                CHECK(ch.path_angles[k0 + i][l].aaod_deg == ch.path_angles[k0][l].aaod_deg);
    }
    for (std::size_t k = 0; k < 5; ++k)
        for (const auto& p : ch.path_angles[k]) {
            const auto& s = m.groups[m.group_of(k)];
            CHECK(std::abs(p.aaod_deg - s.mean_aaod_deg) <= s.aaod_spread_deg);
            CHECK(std::abs(p.eaod_deg - s.mean_eaod_deg) <= s.eaod_spread_deg);
        }
}

TEST_CASE("path gains are CN(0, 1/L) scaled by distance") {
    ChannelModel m;
    m.array = {2, 2, 0.5};
    m.groups = {GroupAngularSpec{50, 10, 25, 10, 1}};
    m.n_paths = 10;
    const UePlacement p = UePlacement::make(30.0, 10.0, 2.0);
    const double scale = distance_gain(m, p.distance_3d_m);
    Rng rng(77);
    double power = 0.0;
    std::size_t count = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const ChannelRealization ch = generate_channel(m, std::span(&p, 1), rng);
        for (std::size_t l = 0; l < m.n_paths; ++l) {
            power += std::norm(ch.per_group[0].z(0, l) / scale);
            ++count;
        }
    }
    CHECK(power / static_cast<double>(count) == doctest::Approx(0.1).epsilon(0.03));
}

TEST_CASE("same stream gives the same channel") {
    const ChannelModel m = two_group_model();
    std::vector<UePlacement> pl(5, UePlacement::make(40.0, 10.0, 2.0));
    Rng a(4), b(4);
    CHECK(generate_channel(m, pl, a).h == generate_channel(m, pl, b).h);
}

} // TEST_SUITE
