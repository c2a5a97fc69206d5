// SPDX-License-Identifier: Apache-2.0

#include "population.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>

namespace fairhp {

OptimizationTrace pso(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng) {
    detail::validate_common(problem, cfg);
    const auto& hp = cfg.hyper.pso;
    if (!(hp.vel_min <= hp.vel_max))
        throw ConfigError("optimizer.pso.vel_min", "must not exceed vel_max");

    const std::size_t n = cfg.n_agents;
    const std::size_t dim = problem.dim;
    detail::Tracker tracker(problem);

    auto pos = detail::initial_population(cfg, dim, n, rng);
    std::vector<detail::Point> vel(n, detail::Point(dim, 0.0));
    std::vector<double> pbest_score(n);
    for (std::size_t i = 0; i < n; ++i)
        pbest_score[i] = tracker.evaluate(pos[i]);
    auto pbest = pos;
    std::size_t g = detail::rank_descending(pbest_score).front();
    tracker.close_iteration();

    const double Q = static_cast<double>(cfg.iterations);
    for (std::size_t q = 1; q <= cfg.iterations; ++q) {
        const double inertia = 1.0 - static_cast<double>(q - 1) / Q;
        const detail::Point gbest = pbest[g];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < dim; ++v) {
                const double w1 = rng.uniform(0.0, 2.0);
                const double w2 = rng.uniform(0.0, 2.0);
                const double next =
                    inertia * vel[i][v] + w1 * (gbest[v] - pos[i][v]) + w2 * (pbest[i][v] - pos[i][v]);
                vel[i][v] = std::clamp(next, hp.vel_min, hp.vel_max);
                pos[i][v] = std::clamp(pos[i][v] + vel[i][v], 0.0, 1.0);
            }
            const double s = tracker.evaluate(pos[i]);
            if (s > pbest_score[i]) {
                pbest_score[i] = s;
                pbest[i] = pos[i];
            }
        }
        g = detail::rank_descending(pbest_score).front();
        tracker.close_iteration();
    }
    return std::move(tracker).finish();
}

} // namespace fairhp
