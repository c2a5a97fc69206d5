// SPDX-License-Identifier: Apache-2.0

#include "fairhp/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#ifndef FAIRHP_VERSION
#define FAIRHP_VERSION "unknown"
#endif

namespace fairhp {

using nlohmann::json;

const char* const kCodeVersion = FAIRHP_VERSION;

namespace {

std::string joined(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ';';
        s += format_double(values[i]);
    }
    return s;
}

json fairness_json(const FairnessSpec& f) {
    if (f.mode == FairnessSpec::Mode::max_min)
        return "maxmin";
    return f.alpha;
}

FairnessSpec fairness_from(const json& j) {
    return j.is_string() ? FairnessSpec::parse(j.get<std::string>()) : FairnessSpec::alpha_fair(j.get<double>());
}

json stat_json(const Statistic& s) { return {{"mean", s.mean}, {"std_error", s.std_error}, {"count", s.count}}; }

Statistic stat_from(const json& j) {
    return {j.at("mean").get<double>(), j.at("std_error").get<double>(), j.at("count").get<std::size_t>()};
}

void write_file(const std::filesystem::path& path, const auto& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << "realization,algorithm,fairness,p_t_dbm,objective,sum_rate,jain,rate_gap,energy_efficiency,evaluations,"
           "rates,best_agent\n";
    for (const auto& r : records) {
        out << r.realization << ',' << r.algorithm << ',' << r.fairness.label() << ',' << format_double(r.p_t_dbm)
            << ',' << format_double(r.objective) << ',' << format_double(r.metrics.sum_rate) << ','
            << (r.metrics.jain ? format_double(*r.metrics.jain) : "") << ',' << format_double(r.metrics.rate_gap)
            << ',' << format_double(r.metrics.energy_efficiency) << ',' << r.evaluations << ','
            << joined(r.metrics.per_ue_rates) << ',' << joined(r.best_agent) << '\n';
    }
}

void write_traces_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << "realization,algorithm,fairness,p_t_dbm,iteration,best_objective\n";
    for (const auto& r : records)
        for (std::size_t q = 0; q < r.trace.size(); ++q)
            out << r.realization << ',' << r.algorithm << ',' << r.fairness.label() << ','
                << format_double(r.p_t_dbm) << ',' << q << ',' << format_double(r.trace[q]) << '\n';
}

json summary_json(const CampaignResult& result) {
    json failures = json::array();
    for (const auto& f : result.failures)
        failures.push_back({{"realization", f.realization}, {"message", f.message}});
    json aggregates = json::array();
    for (const auto& a : result.aggregates)
        aggregates.push_back({{"algorithm", a.algorithm},
                              {"fairness", fairness_json(a.fairness)},
                              {"p_t_dbm", a.p_t_dbm},
                              {"objective", stat_json(a.objective)},
                              {"sum_rate", stat_json(a.sum_rate)},
                              {"jain", stat_json(a.jain)},
                              {"rate_gap", stat_json(a.rate_gap)},
                              {"energy_efficiency", stat_json(a.energy_efficiency)}});
    return {{"code_version", kCodeVersion},
            {"master_seed", result.config.master_seed},
            {"n_records", result.records.size()},
            {"config", to_json(result.config)},
            {"failures", failures},
            {"aggregates", aggregates}};
}

void emit_results(const CampaignResult& result, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
    write_file(out_dir / "records.csv", [&](std::ostream& o) { write_records_csv(o, result.records); });
    write_file(out_dir / "traces.csv", [&](std::ostream& o) { write_traces_csv(o, result.records); });
    write_file(out_dir / "summary.json", [&](std::ostream& o) { o << summary_json(result).dump(2) << '\n'; });
}

Summary summary_from_json(const json& j) {
    Summary s;
    s.code_version = j.at("code_version").get<std::string>();
    s.master_seed = j.at("master_seed").get<std::uint64_t>();
    s.n_records = j.at("n_records").get<std::size_t>();
    s.config = config_from_json(j.at("config"));
    for (const auto& f : j.at("failures"))
        s.failures.push_back({f.at("realization").get<std::size_t>(), f.at("message").get<std::string>()});
    for (const auto& a : j.at("aggregates"))
        s.aggregates.push_back({a.at("algorithm").get<std::string>(), fairness_from(a.at("fairness")),
                                a.at("p_t_dbm").get<double>(), stat_from(a.at("objective")),
                                stat_from(a.at("sum_rate")), stat_from(a.at("jain")), stat_from(a.at("rate_gap")),
                                stat_from(a.at("energy_efficiency"))});
    return s;
}

Summary read_summary(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    try {
        return summary_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed summary " + path.string() + ": " + e.what());
    }
}

} // namespace fairhp
