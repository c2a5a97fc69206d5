// SPDX-License-Identifier: Apache-2.0

#include "fairhp/optimizers.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fairhp {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::pso: return "pso";
    case Algorithm::gwo: return "gwo";
    case Algorithm::aco: return "aco";
    case Algorithm::cs: return "cs";
    case Algorithm::fa: return "fa";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (const Algorithm a : kAllAlgorithms)
        if (to_string(a) == name)
            return a;
    throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
}

std::vector<double> clip(std::span<const double> x, double lo, double hi) {
    std::vector<double> out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [=](double v) { return std::clamp(v, lo, hi); });
    return out;
}

double mantegna_sigma(double beta) {
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = beta * std::tgamma((1.0 + beta) / 2.0) * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

std::vector<double> aco_rank_probabilities(std::size_t kappa1, double kappa2) {
    const double width = static_cast<double>(kappa1) * kappa2;
    std::vector<double> w(kappa1);
    double total = 0.0;
    for (std::size_t j = 0; j < kappa1; ++j) {
        const double r = static_cast<double>(j);
        w[j] = std::exp(-(r * r) / (2.0 * width * width));
        total += w[j];
    }
    for (auto& v : w)
        v /= total;
    return w;
}

OptimizationTrace run(const BoxProblem& problem, const OptimizerConfig& cfg) {
    Rng rng(cfg.seed);
    switch (cfg.algorithm) {
    case Algorithm::pso: return pso(problem, cfg, rng);
    case Algorithm::gwo: return gwo(problem, cfg, rng);
    case Algorithm::aco: return aco(problem, cfg, rng);
    case Algorithm::cs: return cs(problem, cfg, rng);
    case Algorithm::fa: return fa(problem, cfg, rng);
    }
    throw ConfigError("algorithm", "unhandled algorithm");
}

} // namespace fairhp
