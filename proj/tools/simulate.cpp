// SPDX-License-Identifier: Apache-2.0
//
// simulate --config <path> [--out <dir>] [--seed <u64>] [--realizations <n>]
//          [--algorithms pso,gwo,aco,cs,fa] [--alpha <list|maxmin>]
//          [--pt-dbm <list>] [--workers <n>]
//
// Exit status: 0 success, 2 invalid configuration or arguments, 3 campaign failure.

#include "fairhp/config.hpp"
#include "fairhp/errors.hpp"
#include "fairhp/harness.hpp"
#include "fairhp/results_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCampaign = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo simulator for alpha-fair hybrid precoding"};
    std::string config_path;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> realizations;
    std::vector<std::string> algorithms;
    std::vector<std::string> alphas;
    std::vector<double> pt_dbm;
    std::size_t workers = 0;

    app.add_option("--config", config_path, "JSON scenario file")->required();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", seed, "master seed");
    app.add_option("--realizations", realizations, "number of realizations");
    app.add_option("--algorithms", algorithms, "comma-separated optimizers")->delimiter(',');
    app.add_option("--alpha", alphas, "comma-separated fairness levels, numbers or maxmin")->delimiter(',');
    app.add_option("--pt-dbm", pt_dbm, "comma-separated transmit powers in dBm")->delimiter(',');
    app.add_option("--workers", workers, "worker threads, 0 for all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    fairhp::SystemConfig cfg;
    try {
        cfg = fairhp::load_config(config_path);
        if (seed)
            cfg.master_seed = *seed;
        if (realizations)
            cfg.n_realizations = *realizations;
        if (!algorithms.empty()) {
            cfg.algorithms.clear();
            for (const auto& name : algorithms)
                cfg.algorithms.push_back(fairhp::parse_algorithm(name));
        }
        if (!alphas.empty()) {
            cfg.fairness.clear();
            for (const auto& text : alphas) {
                try {
                    cfg.fairness.push_back(fairhp::FairnessSpec::parse(text));
                } catch (const std::invalid_argument& e) {
                    throw fairhp::ConfigError("--alpha", e.what());
                }
            }
        }
        if (!pt_dbm.empty())
            cfg.p_t_dbm = pt_dbm;
        fairhp::validate(cfg);
    } catch (const fairhp::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    fairhp::CampaignContext ctx;
    try {
        ctx = fairhp::prepare_campaign(cfg);
    } catch (const fairhp::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fairhp::InsufficientBeamsError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        fairhp::CampaignOptions options;
        options.workers = workers;
        const fairhp::CampaignResult result = fairhp::run_campaign(ctx, options);
        fairhp::emit_results(result, out_dir);
        std::cerr << result.records.size() << " records, " << result.failures.size() << " failed realizations, written to "
                  << out_dir << '\n';
    } catch (const std::exception& e) {
        std::cerr << "campaign failed: " << e.what() << '\n';
        return kExitCampaign;
    }
    return 0;
}
