// SPDX-License-Identifier: Apache-2.0
//
// Box-constrained maximizers over [0,1]^dim: particle swarm, grey wolf,
// continuous ant colony, cuckoo search and firefly. None of them knows about
// precoding; they only see a BoxProblem.
//
// Every run draws from a single sequential stream in a fixed order (agent
// major, dimension minor), and the best point ever evaluated is tracked
// outside the population, so per_iteration_best never decreases and a fixed
// seed reproduces the trace exactly. Argmax ties go to the lowest index.

#ifndef FAIRHP_OPTIMIZERS_HPP
#define FAIRHP_OPTIMIZERS_HPP

#include "fairhp/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairhp {

struct BoxProblem {
    std::size_t dim = 0;
    std::function<double(std::span<const double>)> evaluate;
};

enum class Algorithm { pso, gwo, aco, cs, fa };

std::string_view to_string(Algorithm a) noexcept;
// Throws ConfigError for unknown names.
Algorithm parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::pso, Algorithm::gwo, Algorithm::aco, Algorithm::cs,
                                               Algorithm::fa};

struct PsoParams {
    double vel_min = -0.2;
    double vel_max = 0.2;
    friend bool operator==(const PsoParams&, const PsoParams&) = default;
};

struct AcoParams {
    std::size_t kappa1 = 10; // archive size
    double kappa2 = 0.5;     // kernel width relative to the archive size
    friend bool operator==(const AcoParams&, const AcoParams&) = default;
};

struct CsParams {
    double kappa1 = 0.25; // per-dimension replacement probability
    double kappa2 = 1.5;  // Levy exponent
    friend bool operator==(const CsParams&, const CsParams&) = default;
};

struct FaParams {
    double kappa1 = 0.1;  // light absorption
    double kappa2 = 0.97; // randomness decay per iteration
    friend bool operator==(const FaParams&, const FaParams&) = default;
};

struct Hyperparams {
    PsoParams pso;
    AcoParams aco;
    CsParams cs;
    FaParams fa;
    friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

struct OptimizerConfig {
    std::size_t n_agents = 100;
    std::size_t iterations = 10;
    Algorithm algorithm = Algorithm::pso;
    Hyperparams hyper;
    std::uint64_t seed = 0;
    // Replace the first random initial agents, in order.
    std::vector<std::vector<double>> initial_points;
};

struct OptimizationTrace {
    std::vector<double> best_point;
    double best_score = 0.0;
    std::vector<double> per_iteration_best; // Q + 1 entries, index 0 is the initial population
    std::size_t evaluations_used = 0;
};

std::vector<double> clip(std::span<const double> x, double lo, double hi);

// Mantegna standard deviation for a Levy exponent beta.
double mantegna_sigma(double beta);
// Selection probabilities of the ACO archive ranks, Gaussian kernel on rank index.
std::vector<double> aco_rank_probabilities(std::size_t kappa1, double kappa2);

OptimizationTrace pso(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng);
OptimizationTrace gwo(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng);
// Throws ConfigError when kappa1 < 2 or kappa1 > n_agents.
OptimizationTrace aco(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng);
OptimizationTrace cs(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng);
// Uses floor(sqrt(n_agents)) fireflies. Throws ConfigError when n_agents < 4.
OptimizationTrace fa(const BoxProblem& problem, const OptimizerConfig& cfg, Rng& rng);

// Dispatches on cfg.algorithm with a stream seeded from cfg.seed.
OptimizationTrace run(const BoxProblem& problem, const OptimizerConfig& cfg);

} // namespace fairhp

#endif // FAIRHP_OPTIMIZERS_HPP
