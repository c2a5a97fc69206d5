// SPDX-License-Identifier: Apache-2.0

#include "fairhp/rf_stage.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace fairhp {

namespace {

std::vector<double> grid_axis(std::size_t count) {
    std::vector<double> axis(count);
    const double n = static_cast<double>(count);
    for (std::size_t i = 0; i < count; ++i)
        axis[i] = -1.0 + (2.0 * static_cast<double>(i + 1) - 1.0) / n;
    return axis;
}

} // namespace

QuantizedGrid build_grid(const ArrayGeometry& geom) {
    return {grid_axis(geom.m_x), grid_axis(geom.m_y)};
}

AodSupport AodSupport::from_group(std::size_t group, const GroupAngularSpec& spec) {
    return {group,
            {spec.mean_eaod_deg - spec.eaod_spread_deg, spec.mean_eaod_deg + spec.eaod_spread_deg},
            {spec.mean_aaod_deg - spec.aaod_spread_deg, spec.mean_aaod_deg + spec.aaod_spread_deg}};
}

SupportImage::SupportImage(const AodSupport& support, std::size_t lattice) {
    if (lattice < 2)
        throw std::invalid_argument("SupportImage: lattice must have at least 2 points per axis");
    samples_.reserve(lattice * lattice);
    const double steps = static_cast<double>(lattice - 1);
    for (std::size_t i = 0; i < lattice; ++i) {
        const double theta =
            support.eaod.lo_deg + (support.eaod.hi_deg - support.eaod.lo_deg) * static_cast<double>(i) / steps;
        for (std::size_t j = 0; j < lattice; ++j) {
            const double psi =
                support.aaod.lo_deg + (support.aaod.hi_deg - support.aaod.lo_deg) * static_cast<double>(j) / steps;
            samples_.push_back(angle_to_gamma(theta, psi));
        }
    }
}

bool SupportImage::intersects_cell(const GridPair& pair, const QuantizedGrid& grid, const ArrayGeometry& geom) const {
    const double cx = grid.lambda_x.at(pair.m);
    const double cy = grid.lambda_y.at(pair.n);
    const double hx = 1.0 / static_cast<double>(geom.m_x);
    const double hy = 1.0 / static_cast<double>(geom.m_y);
    return std::any_of(samples_.begin(), samples_.end(), [&](const Gamma& g) {
        return std::abs(g.x - cx) <= hx && std::abs(g.y - cy) <= hy;
    });
}

bool pair_covers(const GridPair& pair, const AodSupport& support, const ArrayGeometry& geom) {
    return SupportImage(support).intersects_cell(pair, build_grid(geom), geom);
}

std::vector<std::vector<GridPair>> select_angle_pairs(const std::vector<AodSupport>& supports,
                                                      const ArrayGeometry& geom,
                                                      const std::vector<std::size_t>& n_rf_per_group) {
    if (supports.size() != n_rf_per_group.size())
        throw std::invalid_argument("select_angle_pairs: one RF chain count per group required");

    const QuantizedGrid grid = build_grid(geom);
    std::vector<SupportImage> images;
    images.reserve(supports.size());
    for (const auto& s : supports)
        images.emplace_back(s);

    std::vector<std::vector<GridPair>> selected(supports.size());
    for (std::size_t g = 0; g < supports.size(); ++g) {
        const auto& s = supports[g];
        const Gamma center = angle_to_gamma(0.5 * (s.eaod.lo_deg + s.eaod.hi_deg), 0.5 * (s.aaod.lo_deg + s.aaod.hi_deg));

        std::vector<std::pair<double, GridPair>> qualifying;
        for (std::size_t m = 0; m < geom.m_x; ++m) {
            for (std::size_t n = 0; n < geom.m_y; ++n) {
                const GridPair pair{m, n};
                if (!images[g].intersects_cell(pair, grid, geom))
                    continue;
                bool excluded = false;
                for (std::size_t t = 0; t < supports.size() && !excluded; ++t)
                    excluded = t != g && images[t].intersects_cell(pair, grid, geom);
                if (excluded)
                    continue;
                const double dx = grid.lambda_x[m] - center.x;
                const double dy = grid.lambda_y[n] - center.y;
                qualifying.emplace_back(std::hypot(dx, dy), pair);
            }
        }
        if (n_rf_per_group[g] == 0)
            throw std::invalid_argument("select_angle_pairs: group " + std::to_string(g) + " requests zero beams");
        if (qualifying.size() < n_rf_per_group[g])
            throw InsufficientBeamsError(g, qualifying.size(), n_rf_per_group[g]);

        std::stable_sort(qualifying.begin(), qualifying.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return a.second < b.second;
        });
        selected[g].reserve(n_rf_per_group[g]);
        for (std::size_t i = 0; i < n_rf_per_group[g]; ++i)
            selected[g].push_back(qualifying[i].second);
    }
    return selected;
}

RfBeamformer build_rf_beamformer(const std::vector<std::vector<GridPair>>& selected, const ArrayGeometry& geom) {
    const QuantizedGrid grid = build_grid(geom);
    std::size_t n_rf = 0;
    std::set<GridPair> seen;
    for (const auto& group : selected) {
        for (const auto& p : group) {
            if (p.m >= geom.m_x || p.n >= geom.m_y)
                throw std::invalid_argument("build_rf_beamformer: pair off the grid");
            if (!seen.insert(p).second)
                throw std::invalid_argument("build_rf_beamformer: angle pair used twice");
        }
        n_rf += group.size();
    }

    RfBeamformer rf;
    rf.f = CMatrix(geom.antenna_count(), n_rf);
    std::size_t col = 0;
    for (const auto& group : selected) {
        rf.per_group.push_back({group, col});
        rf.n_rf_per_group.push_back(group.size());
        for (const auto& p : group) {
            const CVector e = steering_vector(geom, grid.lambda_x[p.m], grid.lambda_y[p.n]);
            rf.f.set_column(col++, e.span());
        }
    }
    return rf;
}

double leakage(const CMatrix& phi_t, const CVector& f_col) {
    return norm2(matvec(phi_t, f_col.span()).span());
}

} // namespace fairhp
