// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fairhp::detail {

double Tracker::evaluate(std::span<const double> x) {
    if (x.size() != problem_.dim)
        throw DimensionError("optimizer: candidate length " + std::to_string(x.size()) + " for dim " +
                             std::to_string(problem_.dim));
    for (const double v : x)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("optimizer: candidate left the unit box");
    ++evaluations_;
    double s = problem_.evaluate(x);
    if (std::isnan(s))
        s = -std::numeric_limits<double>::infinity();
    if (!has_best_ || s > best_score_) {
        has_best_ = true;
        best_score_ = s;
        best_point_.assign(x.begin(), x.end());
    }
    return s;
}

OptimizationTrace Tracker::finish() && {
    OptimizationTrace t;
    t.best_point = std::move(best_point_);
    t.best_score = best_score_;
    t.per_iteration_best = std::move(per_iteration_);
    t.evaluations_used = evaluations_;
    return t;
}

void validate_common(const BoxProblem& problem, const OptimizerConfig& cfg) {
    if (problem.dim == 0)
        throw ConfigError("optimizer.dim", "must be at least 1");
    if (!problem.evaluate)
        throw ConfigError("optimizer.evaluate", "objective is not set");
    if (cfg.n_agents < 2)
        throw ConfigError("optimizer.n_agents", "must be at least 2");
    for (std::size_t i = 0; i < cfg.initial_points.size(); ++i) {
        const auto& p = cfg.initial_points[i];
        const std::string field = "optimizer.initial_points[" + std::to_string(i) + "]";
        if (p.size() != problem.dim)
            throw ConfigError(field, "length " + std::to_string(p.size()) + " != " + std::to_string(problem.dim));
        for (const double v : p)
            if (!(v >= 0.0 && v <= 1.0))
                throw ConfigError(field, "component outside [0, 1]");
    }
}

std::vector<Point> initial_population(const OptimizerConfig& cfg, std::size_t dim, std::size_t count, Rng& rng) {
    if (cfg.initial_points.size() > count)
        throw ConfigError("optimizer.initial_points",
                          std::to_string(cfg.initial_points.size()) + " points for " + std::to_string(count) + " agents");
    std::vector<Point> pop(count, Point(dim));
    for (auto& agent : pop)
        for (auto& v : agent)
            v = rng.uniform();
    std::copy(cfg.initial_points.begin(), cfg.initial_points.end(), pop.begin());
    return pop;
}

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return idx;
}

} // namespace fairhp::detail
