// SPDX-License-Identifier: Apache-2.0
//
// Campaign output files.
//
// records.csv   realization,algorithm,fairness,p_t_dbm,objective,sum_rate,jain,
//               rate_gap,energy_efficiency,evaluations,rates,best_agent
//               (rates and best_agent are ';'-joined; jain is empty when undefined)
// traces.csv    realization,algorithm,fairness,p_t_dbm,iteration,best_objective
// summary.json  {code_version, master_seed, n_records, config, failures, aggregates}
//
// Floating-point values are written with 17 significant digits.

#ifndef FAIRHP_RESULTS_IO_HPP
#define FAIRHP_RESULTS_IO_HPP

#include "fairhp/config.hpp"
#include "fairhp/harness.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fairhp {

extern const char* const kCodeVersion;

std::string format_double(double x);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_traces_csv(std::ostream& out, const std::vector<RunRecord>& records);
nlohmann::json summary_json(const CampaignResult& result);

// Creates out_dir if needed. Throws std::runtime_error on I/O failure.
void emit_results(const CampaignResult& result, const std::filesystem::path& out_dir);

struct Summary {
    std::string code_version;
    std::uint64_t master_seed = 0;
    std::size_t n_records = 0;
    SystemConfig config;
    std::vector<RealizationFailure> failures;
    std::vector<Aggregate> aggregates;
};

Summary summary_from_json(const nlohmann::json& j);
// Throws std::runtime_error when the file is missing or malformed.
Summary read_summary(const std::filesystem::path& path);

} // namespace fairhp

#endif // FAIRHP_RESULTS_IO_HPP
