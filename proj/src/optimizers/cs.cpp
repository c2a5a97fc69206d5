// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fairhp {

OptimizationTrace cs(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng) {
    detail::validate_common(problem, cfg);
    const auto& hp = cfg.hyper.cs;
    if (!(hp.kappa1 >= 0.0 && hp.kappa1 <= 1.0))
        throw ConfigError("optimizer.cs.kappa1", "must lie in [0, 1]");
    if (!(hp.kappa2 > 0.0 && hp.kappa2 <= 2.0))
        throw ConfigError("optimizer.cs.kappa2", "must lie in (0, 2]");

    const std::size_t n = cfg.n_agents;
    const std::size_t dim = problem.dim;
    const double beta = hp.kappa2;
    const double sigma = mantegna_sigma(beta);
    const double step_scale = beta / std::numbers::pi * std::tgamma(beta) * std::sin(std::numbers::pi * beta / 2.0);

    detail::Tracker tracker(problem);
    auto pos = detail::initial_population(cfg, dim, n, rng);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i)
        scores[i] = tracker.evaluate(pos[i]);
    tracker.close_iteration();

    std::vector<detail::Point> flight(n, detail::Point(dim));
    std::vector<double> flight_scores(n);
    std::vector<detail::Point> kept(n);
    std::vector<double> kept_scores(n);
    detail::Point mixed(dim);
    for (std::size_t q = 1; q <= cfg.iterations; ++q) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < dim; ++v) {
                const double w2 = rng.normal(0.0, sigma);
                const double w3 = rng.normal();
                const double w1 = w2 / std::pow(std::abs(w3), 1.0 / beta);
                const double step = step_scale / std::pow(std::abs(w1), 1.0 + beta);
                flight[i][v] = std::clamp(pos[i][v] + step, 0.0, 1.0);
            }
            flight_scores[i] = tracker.evaluate(flight[i]);
            if (flight_scores[i] > scores[i]) {
                kept[i] = flight[i];
                kept_scores[i] = flight_scores[i];
            } else {
                kept[i] = pos[i];
                kept_scores[i] = scores[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = rng.below(n);
            for (std::size_t v = 0; v < dim; ++v)
                mixed[v] = rng.bernoulli(hp.kappa1) ? kept[j][v] : kept[i][v];
            const double mixed_score = tracker.evaluate(mixed);
            // Strict comparisons keep the earliest of equal candidates.
            const detail::Point* best = &flight[i];
            double best_score = flight_scores[i];
            if (kept_scores[i] > best_score) {
                best = &kept[i];
                best_score = kept_scores[i];
            }
            if (mixed_score > best_score) {
                best = &mixed;
                best_score = mixed_score;
            }
            pos[i] = *best;
            scores[i] = best_score;
        }
        tracker.close_iteration();
    }
    return std::move(tracker).finish();
}

} // namespace fairhp
