// SPDX-License-Identifier: Apache-2.0
//
// Analog RF beamformer built from quantized angle pairs. Each group receives
// orthogonal grid beams whose cells touch its own AoD support and none of the
// other groups' supports.

#ifndef FAIRHP_RF_STAGE_HPP
#define FAIRHP_RF_STAGE_HPP

#include "fairhp/channel.hpp"
#include "fairhp/numerics.hpp"

#include <cstddef>
#include <vector>

namespace fairhp {

struct QuantizedGrid {
    std::vector<double> lambda_x; // -1 + (2m - 1) / m_x, m = 1..m_x
    std::vector<double> lambda_y;
};

QuantizedGrid build_grid(const ArrayGeometry& geom);

// Zero-based grid indices (m along x, n along y).
struct GridPair {
    std::size_t m = 0;
    std::size_t n = 0;

    friend auto operator<=>(const GridPair&, const GridPair&) = default;
};

struct AngleInterval {
    double lo_deg = 0.0;
    double hi_deg = 0.0;
};

struct AodSupport {
    std::size_t group = 0;
    AngleInterval eaod;
    AngleInterval aaod;

    static AodSupport from_group(std::size_t group, const GroupAngularSpec& spec);
};

inline constexpr std::size_t kCoverageLattice = 64;

/// The gamma-space image of an AoD support, approximated by sampling the
/// angle box on a lattice x lattice grid (endpoints included).
class SupportImage {
public:
    SupportImage(const AodSupport& support, std::size_t lattice = kCoverageLattice);

    // True iff some sample lies in the closed cell [lambda_x +/- 1/m_x] x [lambda_y +/- 1/m_y].
    bool intersects_cell(const GridPair& pair, const QuantizedGrid& grid, const ArrayGeometry& geom) const;

    const std::vector<Gamma>& samples() const noexcept { return samples_; }

private:
    std::vector<Gamma> samples_;
};

bool pair_covers(const GridPair& pair, const AodSupport& support, const ArrayGeometry& geom);

/// For every group, n_rf_per_group[g] grid pairs covering its own support and
/// no other. When more qualify, the ones whose cell centers are closest (in
/// gamma space) to the image of the mean angle are kept, ties going to the
/// lower (m, n). Throws InsufficientBeamsError when too few qualify.
std::vector<std::vector<GridPair>> select_angle_pairs(const std::vector<AodSupport>& supports,
                                                      const ArrayGeometry& geom,
                                                      const std::vector<std::size_t>& n_rf_per_group);

struct GroupBeams {
    std::vector<GridPair> pairs;
    std::size_t first_column = 0;
};

struct RfBeamformer {
    CMatrix f; // M x N_RF
    std::vector<GroupBeams> per_group;
    std::vector<std::size_t> n_rf_per_group;

    std::size_t rf_chains() const noexcept { return f.cols(); }
};

RfBeamformer build_rf_beamformer(const std::vector<std::vector<GridPair>>& selected, const ArrayGeometry& geom);

// ||phi_t f_col||_2: residual gain of a beam toward another group's paths.
double leakage(const CMatrix& phi_t, const CVector& f_col);

} // namespace fairhp

#endif // FAIRHP_RF_STAGE_HPP
