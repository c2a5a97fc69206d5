// SPDX-License-Identifier: Apache-2.0
//
// Geometric mmWave channel for a uniform rectangular array: steering vectors,
// UE drops and per-realization channel matrices with their group factorization
// H_g = Z_g Phi_g.
//
// Angles are given in degrees everywhere in this interface.

#ifndef FAIRHP_CHANNEL_HPP
#define FAIRHP_CHANNEL_HPP

#include "fairhp/numerics.hpp"
#include "fairhp/random.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fairhp {

struct ArrayGeometry {
    std::size_t m_x = 16;
    std::size_t m_y = 16;
    double spacing = 0.5; // element spacing in wavelengths

    std::size_t antenna_count() const noexcept { return m_x * m_y; }

    friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

struct GroupAngularSpec {
    double mean_eaod_deg = 50.0;
    double eaod_spread_deg = 10.0;
    double mean_aaod_deg = 25.0;
    double aaod_spread_deg = 10.0;
    std::size_t ue_count = 5;

    friend bool operator==(const GroupAngularSpec&, const GroupAngularSpec&) = default;
};

struct GeometryBounds {
    double min_horizontal_m = 10.0;
    double max_horizontal_m = 100.0;
    double bs_height_m = 10.0;
    double min_ue_height_m = 1.5;
    double max_ue_height_m = 2.5;

    friend bool operator==(const GeometryBounds&, const GeometryBounds&) = default;
};

struct UePlacement {
    double horizontal_distance_m = 0.0;
    double bs_height_m = 0.0;
    double ue_height_m = 0.0;
    double distance_3d_m = 0.0;

    // Throws DomainError unless the resulting 3D distance is positive.
    static UePlacement make(double horizontal_m, double bs_height_m, double ue_height_m);
};

// Whether the distance term of the channel scales amplitude (tau^-eta) or power (tau^-eta on |h|^2).
enum class PathlossConvention { amplitude, power };

struct ChannelModel {
    ArrayGeometry array;
    std::vector<GroupAngularSpec> groups;
    std::size_t n_paths = 20;
    double pathloss_exponent = 3.76;
    PathlossConvention pathloss_convention = PathlossConvention::amplitude;

    std::size_t ue_count() const noexcept;
    // Group owning UE k; UEs are assigned to groups in contiguous blocks.
    std::size_t group_of(std::size_t ue) const;
    std::size_t first_ue(std::size_t group) const;
};

struct Gamma {
    double x = 0.0;
    double y = 0.0;
};

struct PathAngle {
    double eaod_deg = 0.0;
    double aaod_deg = 0.0;
};

struct GroupChannelFactor {
    CMatrix z;   // K_g x L path gains, distance scaling included
    CMatrix phi; // L x M phase responses, one per row
};

struct ChannelRealization {
    CMatrix h; // K x M, row k is h_k^T
    std::vector<GroupChannelFactor> per_group;
    std::vector<std::vector<PathAngle>> path_angles; // per UE, L entries
};

Gamma angle_to_gamma(double eaod_deg, double aaod_deg);

// Length-M Kronecker product of the x and y phase progressions. Throws DomainError if |gamma| > 1.
CVector phase_response(const ArrayGeometry& geom, double gamma_x, double gamma_y);

// conj(phase_response) / sqrt(M): unit norm, constant modulus.
CVector steering_vector(const ArrayGeometry& geom, double gamma_x, double gamma_y);

UePlacement draw_placement(Rng& rng, const GeometryBounds& bounds);

double distance_gain(const ChannelModel& model, double distance_3d_m);

/// Deterministic assembly from explicit draws.
///
/// group_paths[g] holds the L path angles shared by every UE of group g and
/// unit_gains[k] the L unscaled complex gains of UE k; the distance term is
/// applied here.
ChannelRealization assemble_channel(const ChannelModel& model, std::span<const UePlacement> placements,
                                    const std::vector<std::vector<PathAngle>>& group_paths,
                                    const std::vector<std::vector<Complex>>& unit_gains);

/// Draws path angles uniformly inside each group's mean +/- spread box and
/// CN(0, 1/L) path gains, then assembles the channel.
ChannelRealization generate_channel(const ChannelModel& model, std::span<const UePlacement> placements, Rng& rng);

} // namespace fairhp

#endif // FAIRHP_CHANNEL_HPP
