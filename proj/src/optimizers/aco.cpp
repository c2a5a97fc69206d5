// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fairhp {

OptimizationTrace aco(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng) {
    detail::validate_common(problem, cfg);
    const auto& hp = cfg.hyper.aco;
    const std::size_t n = cfg.n_agents;
    const std::size_t dim = problem.dim;
    const std::size_t k = hp.kappa1;
    if (k < 2)
        throw ConfigError("optimizer.aco.kappa1", "archive size must be at least 2");
    if (k > n)
        throw ConfigError("optimizer.aco.kappa1",
                          "archive size " + std::to_string(k) + " exceeds n_agents " + std::to_string(n));
    if (!(hp.kappa2 > 0.0))
        throw ConfigError("optimizer.aco.kappa2", "must be positive");

    const auto probs = aco_rank_probabilities(k, hp.kappa2);
    std::vector<double> cumulative(k);
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j)
        cumulative[j] = acc += probs[j];

    detail::Tracker tracker(problem);
    auto pos = detail::initial_population(cfg, dim, n, rng);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i)
        scores[i] = tracker.evaluate(pos[i]);

    std::vector<detail::Point> archive;
    std::vector<double> archive_scores;
    const auto refresh_archive = [&] {
        std::vector<detail::Point> pts = archive;
        std::vector<double> all = archive_scores;
        pts.insert(pts.end(), pos.begin(), pos.end());
        all.insert(all.end(), scores.begin(), scores.end());
        const auto order = detail::rank_descending(all);
        archive.clear();
        archive_scores.clear();
        for (std::size_t r = 0; r < k; ++r) {
            archive.push_back(pts[order[r]]);
            archive_scores.push_back(all[order[r]]);
        }
    };
    refresh_archive();
    tracker.close_iteration();

    std::vector<detail::Point> spread(k, detail::Point(dim));
    for (std::size_t q = 1; q <= cfg.iterations; ++q) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t v = 0; v < dim; ++v) {
                double s = 0.0;
                for (std::size_t c = 0; c < k; ++c)
                    s += std::abs(archive[j][v] - archive[c][v]);
                spread[j][v] = s / static_cast<double>(k - 1);
            }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < dim; ++v) {
                const double u = rng.uniform();
                const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
                const std::size_t j = std::min<std::size_t>(it - cumulative.begin(), k - 1);
                const double w = rng.normal();
                pos[i][v] = std::clamp(archive[j][v] + w * spread[j][v], 0.0, 1.0);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            scores[i] = tracker.evaluate(pos[i]);
        refresh_archive();
        tracker.close_iteration();
    }
    return std::move(tracker).finish();
}

} // namespace fairhp
