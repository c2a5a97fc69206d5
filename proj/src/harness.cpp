// SPDX-License-Identifier: Apache-2.0

#include "fairhp/harness.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>

namespace fairhp {

namespace {

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

RunRecord make_record(std::size_t index, std::string algorithm, double p_t_dbm, const FairnessSpec& fairness,
                      const EffectiveChannel& eff, std::span<const double> agent, const SystemConfig& cfg) {
    const AgentEvaluation ev = evaluate_agent(agent, eff, fairness);
    RunRecord rec;
    rec.realization = index;
    rec.algorithm = std::move(algorithm);
    rec.p_t_dbm = p_t_dbm;
    rec.fairness = fairness;
    rec.objective = ev.utility;
    rec.metrics = make_metric_record(ev.rates, eff.total_power_w, cfg.rf_chain_count(), cfg.p_rf_w);
    rec.best_agent.assign(agent.begin(), agent.end());
    return rec;
}

} // namespace

CampaignContext prepare_campaign(const SystemConfig& cfg) {
    validate(cfg);
    CampaignContext ctx;
    ctx.config = cfg;
    ctx.model = cfg.channel_model();
    std::vector<AodSupport> supports;
    for (std::size_t g = 0; g < cfg.groups.size(); ++g)
        supports.push_back(AodSupport::from_group(g, cfg.groups[g]));
    ctx.rf = build_rf_beamformer(select_angle_pairs(supports, cfg.array, cfg.n_rf_per_group), cfg.array);
    ctx.noise_power_w = cfg.noise_power_w();
    return ctx;
}

RealizationDraw draw_realization(const CampaignContext& ctx, std::size_t index) {
    const SystemConfig& cfg = ctx.config;
    RealizationDraw d;
    Rng placement_rng = Rng::child(cfg.master_seed, index, "placement");
    d.placements.reserve(cfg.ue_count());
    for (std::size_t k = 0; k < cfg.ue_count(); ++k)
        d.placements.push_back(draw_placement(placement_rng, cfg.geometry));
    Rng channel_rng = Rng::child(cfg.master_seed, index, "channel");
    d.channel = generate_channel(ctx.model, d.placements, channel_rng);
    d.h_eff = effective_channel(d.channel.h, ctx.rf.f);
    return d;
}

std::uint64_t optimizer_seed(std::uint64_t master_seed, std::size_t index, Algorithm algorithm,
                             const FairnessSpec& fairness, double p_t_dbm) {
    const std::string tag =
        "opt:" + std::string(to_string(algorithm)) + ":" + fairness.label() + ":" + shortest(p_t_dbm);
    return derive_seed(master_seed, index, tag);
}

std::vector<RunRecord> run_realization(const CampaignContext& ctx, std::size_t index,
                                       const RealizationOptions& options) {
    const SystemConfig& cfg = ctx.config;
    const RealizationDraw draw = draw_realization(ctx, index);
    const std::size_t K = cfg.ue_count();
    const SearchAgent baseline_agent = SearchAgent::uniform(K);
    const std::vector<double> baseline(baseline_agent.values().begin(), baseline_agent.values().end());

    std::vector<EffectiveChannel> eff;
    for (const double p_t : cfg.p_t_dbm)
        eff.push_back(make_effective_channel(draw.channel.h, ctx.rf.f, ctx.noise_power_w, dbm_to_watts(p_t)));

    std::vector<RunRecord> out;
    out.reserve((cfg.algorithms.size() + 1) * cfg.fairness.size() * cfg.p_t_dbm.size());
    for (const FairnessSpec& fairness : cfg.fairness)
        for (std::size_t p = 0; p < cfg.p_t_dbm.size(); ++p) {
            RunRecord rec = make_record(index, kBaselineLabel, cfg.p_t_dbm[p], fairness, eff[p], baseline, cfg);
            rec.evaluations = 1;
            out.push_back(std::move(rec));
        }

    for (const Algorithm algorithm : cfg.algorithms)
        for (const FairnessSpec& fairness : cfg.fairness)
            for (std::size_t p = 0; p < cfg.p_t_dbm.size(); ++p) {
                const EffectiveChannel& e = eff[p];
                BoxProblem problem{2 * K, [&](std::span<const double> x) { return objective(x, e, fairness); }};
                OptimizerConfig oc;
                oc.n_agents = cfg.optimizer.n_agents;
                oc.iterations = cfg.optimizer.iterations;
                oc.algorithm = algorithm;
                oc.hyper = cfg.optimizer.hyper;
                oc.seed = optimizer_seed(cfg.master_seed, index, algorithm, fairness, cfg.p_t_dbm[p]);
                oc.initial_points.assign(options.baseline_agents, baseline);
                OptimizationTrace trace = run(problem, oc);

                RunRecord rec = make_record(index, std::string(to_string(algorithm)), cfg.p_t_dbm[p], fairness, e,
                                            trace.best_point, cfg);
                rec.trace = std::move(trace.per_iteration_best);
                rec.evaluations = trace.evaluations_used;
                out.push_back(std::move(rec));
            }
    return out;
}

Statistic summarize(const std::vector<double>& samples) {
    Statistic s;
    s.count = samples.size();
    if (samples.empty())
        return s;
    double sum = 0.0;
    for (const double x : samples)
        sum += x;
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (const double x : samples)
            ss += (x - s.mean) * (x - s.mean);
        const double n = static_cast<double>(s.count);
        s.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return s;
}

std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records) {
    struct Cell {
        std::string algorithm;
        FairnessSpec fairness;
        double p_t_dbm;
        std::vector<double> objective, sum_rate, jain, rate_gap, ee;
    };
    std::vector<Cell> cells;
    // Cells keep the order in which they first appear.
    const auto find_cell = [&](const RunRecord& r) -> Cell& {
        for (auto& c : cells)
            if (c.algorithm == r.algorithm && c.fairness == r.fairness && c.p_t_dbm == r.p_t_dbm)
                return c;
        cells.push_back({r.algorithm, r.fairness, r.p_t_dbm, {}, {}, {}, {}, {}});
        return cells.back();
    };
    for (const auto& r : records) {
        Cell& c = find_cell(r);
        c.objective.push_back(r.objective);
        c.sum_rate.push_back(r.metrics.sum_rate);
        if (r.metrics.jain)
            c.jain.push_back(*r.metrics.jain);
        c.rate_gap.push_back(r.metrics.rate_gap);
        c.ee.push_back(r.metrics.energy_efficiency);
    }
    std::vector<Aggregate> out;
    for (const auto& c : cells)
        out.push_back({c.algorithm, c.fairness, c.p_t_dbm, summarize(c.objective), summarize(c.sum_rate),
                       summarize(c.jain), summarize(c.rate_gap), summarize(c.ee)});
    return out;
}

CampaignResult run_campaign(const SystemConfig& cfg, const CampaignOptions& options) {
    return run_campaign(prepare_campaign(cfg), options);
}

CampaignResult run_campaign(const CampaignContext& ctx, const CampaignOptions& options) {
    const std::size_t n = ctx.config.n_realizations;
    std::size_t workers = options.workers;
    if (workers == 0)
        workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, n);

    std::vector<std::vector<RunRecord>> per_realization(n);
    std::vector<std::optional<std::string>> errors(n);
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                per_realization[i] = run_realization(ctx, i, options.realization);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    CampaignResult result;
    result.config = ctx.config;
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            result.failures.push_back({i, *errors[i]});
            continue;
        }
        for (auto& r : per_realization[i])
            result.records.push_back(std::move(r));
    }
    if (result.failures.size() * 100 > n) {
        const auto& first = result.failures.front();
        throw CampaignError(std::to_string(result.failures.size()) + " of " + std::to_string(n) +
                            " realizations failed; first (realization " + std::to_string(first.realization) +
                            "): " + first.message);
    }
    result.aggregates = aggregate(result.records);
    return result;
}

} // namespace fairhp
