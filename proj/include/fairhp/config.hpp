// SPDX-License-Identifier: Apache-2.0
//
// Scenario description for a simulation campaign and its JSON form.
//
// Every field has a default, so an empty JSON object yields the reference
// scenario: a 16x16 array, two groups of five UEs with eight RF chains each,
// 20 paths, -174 dBm/Hz over 120 kHz. JSON keys mirror the member names;
// unknown keys are rejected.

#ifndef FAIRHP_CONFIG_HPP
#define FAIRHP_CONFIG_HPP

#include "fairhp/bb_stage.hpp"
#include "fairhp/channel.hpp"
#include "fairhp/metrics.hpp"
#include "fairhp/optimizers.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace fairhp {

// G groups with mean AAoD 25 + 360 (g - 1) / G degrees, EAoD 50 degrees, 10 degree spreads.
std::vector<GroupAngularSpec> default_groups(std::size_t n_groups, std::size_t ues_per_group);

struct OptimizerSettings {
    std::size_t n_agents = 100;
    std::size_t iterations = 10;
    Hyperparams hyper;
    friend bool operator==(const OptimizerSettings&, const OptimizerSettings&) = default;
};

struct SystemConfig {
    ArrayGeometry array;
    std::vector<GroupAngularSpec> groups = default_groups(2, 5);
    std::vector<std::size_t> n_rf_per_group = {8, 8};
    std::vector<double> p_t_dbm = {30.0};
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 120e3;
    double pathloss_exponent = 3.76;
    PathlossConvention pathloss_convention = PathlossConvention::amplitude;
    std::size_t n_paths = 20;
    std::vector<FairnessSpec> fairness = {FairnessSpec::alpha_fair(0.0)};
    std::vector<Algorithm> algorithms = {std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
    OptimizerSettings optimizer;
    std::size_t n_realizations = 5000;
    std::uint64_t master_seed = 1;
    GeometryBounds geometry;
    double p_rf_w = kRfChainPowerW;

    std::size_t ue_count() const noexcept;
    std::size_t rf_chain_count() const noexcept;
    ChannelModel channel_model() const;
    double noise_power_w() const;

    friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

// Throws ConfigError naming the first offending field.
void validate(const SystemConfig& cfg);

nlohmann::json to_json(const SystemConfig& cfg);
// Missing keys take defaults. Besides "groups", a scenario may give
// "n_groups"/"ues_per_group"; "n_rf_per_group", "p_t_dbm" and "fairness"
// accept a scalar or a list. Throws ConfigError.
SystemConfig config_from_json(const nlohmann::json& j);

// An empty or whitespace-only file is the default scenario. Throws ConfigError.
SystemConfig load_config(const std::filesystem::path& path);
void save_config(const SystemConfig& cfg, const std::filesystem::path& path);

} // namespace fairhp

#endif // FAIRHP_CONFIG_HPP
