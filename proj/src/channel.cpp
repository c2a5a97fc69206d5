// SPDX-License-Identifier: Apache-2.0

#include "fairhp/channel.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fairhp {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kGammaSlack = 1e-12;

double checked_gamma(double g, const char* name) {
    if (!std::isfinite(g) || std::abs(g) > 1.0 + kGammaSlack)
        throw DomainError(std::string("phase_response: ") + name + " = " + std::to_string(g) + " outside [-1, 1]");
    return std::clamp(g, -1.0, 1.0);
}

CVector progression(std::size_t n, double spacing, double gamma) {
    CVector v(n);
    const double step = -2.0 * std::numbers::pi * spacing * gamma;
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::polar(1.0, step * static_cast<double>(i));
    return v;
}

} // namespace

UePlacement UePlacement::make(double horizontal_m, double bs_height_m, double ue_height_m) {
    const double dh = bs_height_m - ue_height_m;
    const double tau = std::sqrt(horizontal_m * horizontal_m + dh * dh);
    if (!(tau > 0.0))
        throw DomainError("UePlacement: 3D distance must be positive");
    return {horizontal_m, bs_height_m, ue_height_m, tau};
}

std::size_t ChannelModel::ue_count() const noexcept {
    std::size_t k = 0;
    for (const auto& g : groups)
        k += g.ue_count;
    return k;
}

std::size_t ChannelModel::group_of(std::size_t ue) const {
    std::size_t start = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        start += groups[g].ue_count;
        if (ue < start)
            return g;
    }
    throw std::out_of_range("ChannelModel::group_of: UE " + std::to_string(ue));
}

std::size_t ChannelModel::first_ue(std::size_t group) const {
    std::size_t start = 0;
    for (std::size_t g = 0; g < group; ++g)
        start += groups.at(g).ue_count;
    return start;
}

Gamma angle_to_gamma(double eaod_deg, double aaod_deg) {
    const double theta = eaod_deg * kDegToRad;
    const double psi = aaod_deg * kDegToRad;
    return {std::sin(theta) * std::cos(psi), std::sin(theta) * std::sin(psi)};
}

CVector phase_response(const ArrayGeometry& geom, double gamma_x, double gamma_y) {
    const double gx = checked_gamma(gamma_x, "gamma_x");
    const double gy = checked_gamma(gamma_y, "gamma_y");
    return kronecker(progression(geom.m_x, geom.spacing, gx), progression(geom.m_y, geom.spacing, gy));
}

CVector steering_vector(const ArrayGeometry& geom, double gamma_x, double gamma_y) {
    CVector v = phase_response(geom, gamma_x, gamma_y);
    const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
    for (auto& z : v)
        z = std::conj(z) * scale;
    return v;
}

UePlacement draw_placement(Rng& rng, const GeometryBounds& bounds) {
    const double horizontal = rng.uniform(bounds.min_horizontal_m, bounds.max_horizontal_m);
    const double ue_height = rng.uniform(bounds.min_ue_height_m, bounds.max_ue_height_m);
    return UePlacement::make(horizontal, bounds.bs_height_m, ue_height);
}

double distance_gain(const ChannelModel& model, double distance_3d_m) {
    const double eta = model.pathloss_convention == PathlossConvention::amplitude ? model.pathloss_exponent
                                                                                  : 0.5 * model.pathloss_exponent;
    return std::pow(distance_3d_m, -eta);
}

ChannelRealization assemble_channel(const ChannelModel& model, std::span<const UePlacement> placements,
                                    const std::vector<std::vector<PathAngle>>& group_paths,
                                    const std::vector<std::vector<Complex>>& unit_gains) {
    const std::size_t K = model.ue_count();
    const std::size_t M = model.array.antenna_count();
    const std::size_t L = model.n_paths;
    if (placements.size() != K || unit_gains.size() != K || group_paths.size() != model.groups.size())
        throw DimensionError("assemble_channel: inputs do not match the group layout");

    ChannelRealization out;
    out.h = CMatrix(K, M);
    out.per_group.reserve(model.groups.size());
    out.path_angles.resize(K);

    for (std::size_t g = 0; g < model.groups.size(); ++g) {
        const auto& paths = group_paths[g];
        if (paths.size() != L)
            throw DimensionError("assemble_channel: group " + std::to_string(g) + " has " +
                                 std::to_string(paths.size()) + " paths, expected " + std::to_string(L));
        const std::size_t Kg = model.groups[g].ue_count;
        const std::size_t k0 = model.first_ue(g);

        GroupChannelFactor factor{CMatrix(Kg, L), CMatrix(L, M)};
        for (std::size_t l = 0; l < L; ++l) {
            const Gamma gm = angle_to_gamma(paths[l].eaod_deg, paths[l].aaod_deg);
            factor.phi.set_row(l, phase_response(model.array, gm.x, gm.y).span());
        }
        for (std::size_t i = 0; i < Kg; ++i) {
            const std::size_t k = k0 + i;
            if (unit_gains[k].size() != L)
                throw DimensionError("assemble_channel: UE " + std::to_string(k) + " gain count");
            const double scale = distance_gain(model, placements[k].distance_3d_m);
            for (std::size_t l = 0; l < L; ++l)
                factor.z(i, l) = scale * unit_gains[k][l];
            out.path_angles[k] = paths;
        }
        const CMatrix hg = matmul(factor.z, factor.phi);
        for (std::size_t i = 0; i < Kg; ++i)
            out.h.set_row(k0 + i, hg.row(i));
        out.per_group.push_back(std::move(factor));
    }
    return out;
}

ChannelRealization generate_channel(const ChannelModel& model, std::span<const UePlacement> placements, Rng& rng) {
    const std::size_t L = model.n_paths;
    std::vector<std::vector<PathAngle>> group_paths(model.groups.size());
    for (std::size_t g = 0; g < model.groups.size(); ++g) {
        const auto& spec = model.groups[g];
        group_paths[g].resize(L);
        for (auto& p : group_paths[g]) {
            p.eaod_deg = rng.uniform(spec.mean_eaod_deg - spec.eaod_spread_deg, spec.mean_eaod_deg + spec.eaod_spread_deg);
            p.aaod_deg = rng.uniform(spec.mean_aaod_deg - spec.aaod_spread_deg, spec.mean_aaod_deg + spec.aaod_spread_deg);
        }
    }

    // CN(0, 1/L): each quadrature has variance 1/(2L).
    const double sd = std::sqrt(0.5 / static_cast<double>(L));
    std::vector<std::vector<Complex>> gains(model.ue_count(), std::vector<Complex>(L));
    for (auto& ue : gains)
        for (auto& z : ue) {
            const double re = rng.normal(0.0, sd);
            const double im = rng.normal(0.0, sd);
            z = {re, im};
        }
    return assemble_channel(model, placements, group_paths, gains);
}

} // namespace fairhp
