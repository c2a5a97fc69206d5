// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include <algorithm>
#include <cmath>

namespace fairhp {

namespace {

struct Leaders {
    std::vector<detail::Point> points;
    std::vector<double> scores;
};

// Best three of the current leaders followed by the population; fewer than
// three distinct agents repeat the last one.
Leaders select_leaders(const Leaders& prev, const std::vector<detail::Point>& pop, const std::vector<double>& scores) {
    std::vector<const detail::Point*> pts;
    std::vector<double> all;
    for (std::size_t i = 0; i < prev.points.size(); ++i) {
        pts.push_back(&prev.points[i]);
        all.push_back(prev.scores[i]);
    }
    for (std::size_t i = 0; i < pop.size(); ++i) {
        pts.push_back(&pop[i]);
        all.push_back(scores[i]);
    }
    const auto order = detail::rank_descending(all);
    Leaders out;
    for (std::size_t r = 0; r < 3; ++r) {
        const std::size_t idx = order[std::min(r, order.size() - 1)];
        out.points.push_back(*pts[idx]);
        out.scores.push_back(all[idx]);
    }
    return out;
}

} // namespace

OptimizationTrace gwo(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng) {
    detail::validate_common(problem, cfg);
    const std::size_t n = cfg.n_agents;
    const std::size_t dim = problem.dim;
    detail::Tracker tracker(problem);

    auto pos = detail::initial_population(cfg, dim, n, rng);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i)
        scores[i] = tracker.evaluate(pos[i]);
    Leaders leaders = select_leaders({}, pos, scores);
    tracker.close_iteration();

    const double Q = static_cast<double>(cfg.iterations);
    for (std::size_t q = 1; q <= cfg.iterations; ++q) {
        const double kappa = 2.0 - 2.0 * static_cast<double>(q - 1) / Q;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < dim; ++v) {
                double acc = 0.0;
                for (const auto& wolf : leaders.points) {
                    const double w1 = rng.uniform(-kappa, kappa);
                    const double w2 = rng.uniform(0.0, 2.0);
                    acc += wolf[v] - w1 * std::abs(w2 * wolf[v] - pos[i][v]);
                }
                pos[i][v] = std::clamp(acc / 3.0, 0.0, 1.0);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            scores[i] = tracker.evaluate(pos[i]);
        leaders = select_leaders(leaders, pos, scores);
        tracker.close_iteration();
    }
    return std::move(tracker).finish();
}

} // namespace fairhp
