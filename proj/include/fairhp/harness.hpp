// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo driver: one realization draws UE positions and a channel,
// applies the campaign-wide RF beamformer, then runs every requested
// optimizer for every (transmit power, fairness level) pair next to the
// equal-allocation baseline.
//
// Randomness is keyed by (master_seed, realization index, purpose), so a
// realization's records do not depend on which worker ran it or on how many
// realizations the campaign holds.

#ifndef FAIRHP_HARNESS_HPP
#define FAIRHP_HARNESS_HPP

#include "fairhp/bb_stage.hpp"
#include "fairhp/channel.hpp"
#include "fairhp/config.hpp"
#include "fairhp/metrics.hpp"
#include "fairhp/optimizers.hpp"
#include "fairhp/rf_stage.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fairhp {

inline constexpr const char* kBaselineLabel = "baseline";

// Everything shared by all realizations of a campaign.
struct CampaignContext {
    SystemConfig config;
    ChannelModel model;
    RfBeamformer rf;
    double noise_power_w = 0.0;
};

// Validates the config and builds the RF beamformer. Throws ConfigError or InsufficientBeamsError.
CampaignContext prepare_campaign(const SystemConfig& cfg);

struct RealizationDraw {
    std::vector<UePlacement> placements;
    ChannelRealization channel;
    CMatrix h_eff; // K x N_RF
};

RealizationDraw draw_realization(const CampaignContext& ctx, std::size_t index);

struct RunRecord {
    std::size_t realization = 0;
    std::string algorithm; // optimizer name or kBaselineLabel
    double p_t_dbm = 0.0;
    FairnessSpec fairness;
    double objective = 0.0;
    MetricRecord metrics;
    std::vector<double> best_agent;
    std::vector<double> trace; // best objective per iteration, empty for the baseline
    std::size_t evaluations = 0;
};

struct RealizationOptions {
    // Leading optimizer agents replaced by the equal-allocation agent.
    std::size_t baseline_agents = 0;
};

// Records ordered by algorithm (baseline first, then config order), fairness level, transmit power.
std::vector<RunRecord> run_realization(const CampaignContext& ctx, std::size_t index,
                                       const RealizationOptions& options = {});

// Seed of the optimizer stream for one (realization, algorithm, fairness, power) cell.
std::uint64_t optimizer_seed(std::uint64_t master_seed, std::size_t index, Algorithm algorithm,
                             const FairnessSpec& fairness, double p_t_dbm);

struct Statistic {
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(count); zero for one sample
    std::size_t count = 0;
    friend bool operator==(const Statistic&, const Statistic&) = default;
};

Statistic summarize(const std::vector<double>& samples);

struct Aggregate {
    std::string algorithm;
    FairnessSpec fairness;
    double p_t_dbm = 0.0;
    Statistic objective;
    Statistic sum_rate;
    Statistic jain; // realizations with an undefined index are skipped
    Statistic rate_gap;
    Statistic energy_efficiency;
    friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

// One aggregate per (algorithm, fairness, power) cell in record order.
std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records);

struct RealizationFailure {
    std::size_t realization = 0;
    std::string message;
};

struct CampaignResult {
    SystemConfig config;
    std::vector<RunRecord> records; // sorted by realization, then run_realization order
    std::vector<RealizationFailure> failures;
    std::vector<Aggregate> aggregates;
};

struct CampaignOptions {
    std::size_t workers = 0; // 0 picks the hardware concurrency
    RealizationOptions realization;
};

// Failed realizations are recorded and skipped; more than 1% failures throws CampaignError.
CampaignResult run_campaign(const SystemConfig& cfg, const CampaignOptions& options = {});
CampaignResult run_campaign(const CampaignContext& ctx, const CampaignOptions& options = {});

} // namespace fairhp

#endif // FAIRHP_HARNESS_HPP
