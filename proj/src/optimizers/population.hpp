// SPDX-License-Identifier: Apache-2.0
//
// Shared plumbing for the population-based optimizers (internal header).

#ifndef FAIRHP_OPTIMIZERS_POPULATION_HPP
#define FAIRHP_OPTIMIZERS_POPULATION_HPP

#include "fairhp/optimizers.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace fairhp::detail {

using Point = std::vector<double>;

// Counts evaluations, enforces box feasibility and remembers the best point ever scored.
class Tracker {
public:
    explicit Tracker(const BoxProblem& problem) : problem_(problem) {}

    // NaN scores are treated as -inf.
    double evaluate(std::span<const double> x);

    // Appends the current best-ever score to the per-iteration trace.
    void close_iteration() { per_iteration_.push_back(best_score_); }

    OptimizationTrace finish() &&;

private:
    const BoxProblem& problem_;
    Point best_point_;
    double best_score_ = -std::numeric_limits<double>::infinity();
    bool has_best_ = false;
    std::vector<double> per_iteration_;
    std::size_t evaluations_ = 0;
};

// Throws ConfigError on an unusable problem or agent count.
void validate_common(const BoxProblem& problem, const OptimizerConfig& cfg);

// `count` uniform points drawn agent-major; the first cfg.initial_points replace the leading draws.
std::vector<Point> initial_population(const OptimizerConfig& cfg, std::size_t dim, std::size_t count, Rng& rng);

// Indices sorted by descending score; equal scores keep ascending index.
std::vector<std::size_t> rank_descending(std::span<const double> scores);

} // namespace fairhp::detail

#endif // FAIRHP_OPTIMIZERS_POPULATION_HPP
