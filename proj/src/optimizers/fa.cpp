// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fairhp {

OptimizationTrace fa(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng) {
    detail::validate_common(problem, cfg);
    const auto& hp = cfg.hyper.fa;
    if (cfg.n_agents < 4)
        throw ConfigError("optimizer.n_agents", "firefly search needs at least 4 agents");
    if (!(hp.kappa1 >= 0.0))
        throw ConfigError("optimizer.fa.kappa1", "must be non-negative");
    if (!(hp.kappa2 >= 0.0 && hp.kappa2 <= 1.0))
        throw ConfigError("optimizer.fa.kappa2", "must lie in [0, 1]");

    std::size_t n = 1;
    while ((n + 1) * (n + 1) <= cfg.n_agents)
        ++n;
    const std::size_t dim = problem.dim;

    detail::Tracker tracker(problem);
    auto pos = detail::initial_population(cfg, dim, n, rng);
    for (std::size_t i = 0; i < n; ++i)
        tracker.evaluate(pos[i]);
    tracker.close_iteration();

    std::vector<detail::Point> next(n);
    detail::Point cand(dim);
    for (std::size_t q = 1; q <= cfg.iterations; ++q) {
        const double noise = std::pow(hp.kappa2, static_cast<double>(q));
        for (std::size_t i = 0; i < n; ++i) {
            double best_score = 0.0;
            bool have = false;
            for (std::size_t j = 0; j < n; ++j) {
                double d2 = 0.0;
                for (std::size_t v = 0; v < dim; ++v) {
                    const double d = pos[i][v] - pos[j][v];
                    d2 += d * d;
                }
                const double attraction = std::exp(-hp.kappa1 * d2);
                for (std::size_t v = 0; v < dim; ++v) {
                    const double w = rng.uniform(-0.5, 0.5);
                    cand[v] = std::clamp(pos[i][v] + attraction * (pos[j][v] - pos[i][v]) + noise * w, 0.0, 1.0);
                }
                const double s = tracker.evaluate(cand);
                if (!have || s > best_score) {
                    have = true;
                    best_score = s;
                    next[i] = cand;
                }
            }
        }
        pos.swap(next);
        tracker.close_iteration();
    }
    return std::move(tracker).finish();
}

} // namespace fairhp
