// SPDX-License-Identifier: Apache-2.0
//
// Digital baseband stage: the parameterized optimal precoder, per-UE SINR and
// rates, and the alpha-fair objective that the metaheuristics maximize.
//
// A search agent is a point in [0,1]^{2K}: the first K entries are normalized
// powers p_hat, the last K normalized regularizers beta_hat. Both halves are
// rescaled to sum to P_T, so only their ratios matter.

#ifndef FAIRHP_BB_STAGE_HPP
#define FAIRHP_BB_STAGE_HPP

#include "fairhp/numerics.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairhp {

// Agent components are floored here before normalization.
inline constexpr double kAgentFloor = 1e-9;
// Rates are floored here inside the utility when alpha >= 1.
inline constexpr double kRateFloor = 1e-12;

struct EffectiveChannel {
    CMatrix h_eff; // K x N_RF, H F
    double noise_power_w = 0.0;
    double total_power_w = 0.0;

    std::size_t ue_count() const noexcept { return h_eff.rows(); }
    std::size_t rf_chains() const noexcept { return h_eff.cols(); }
};

// K x N_RF product H F. Throws DimensionError on mismatch.
CMatrix effective_channel(const CMatrix& h, const CMatrix& f);

// Validates powers and builds the BB-stage view. Throws DomainError for non-positive powers.
EffectiveChannel make_effective_channel(const CMatrix& h, const CMatrix& f, double noise_power_w, double total_power_w);

class SearchAgent {
public:
    // Throws DomainError for odd/empty length or components outside [0, 1].
    explicit SearchAgent(std::vector<double> values);

    // Every component set to `value`; 0.5 gives the equal-allocation baseline.
    static SearchAgent uniform(std::size_t ue_count, double value = 0.5);

    std::size_t ue_count() const noexcept { return values_.size() / 2; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> p_hat() const noexcept { return std::span(values_).first(ue_count()); }
    std::span<const double> beta_hat() const noexcept { return std::span(values_).last(ue_count()); }

private:
    std::vector<double> values_;
};

struct Normalization {
    double eps1 = 0.0; // P_T / sum(p_hat)
    double eps2 = 0.0; // P_T / sum(beta_hat)
};

Normalization normalization(std::span<const double> agent, double p_t_w);

struct BbPrecoder {
    CMatrix b; // N_RF x K
    std::vector<double> powers;       // p_k, sums to P_T
    std::vector<double> regularizers; // beta_k, sums to P_T
};

/// b_k = sqrt(p_k) G^{-1} H_k^H / ||G^{-1} H_k^H|| with
/// G = I + sum_u (beta_u / sigma^2) H_u^H H_u, H_u the u-th row of the
/// effective channel. G is factored once per agent.
BbPrecoder bb_precoder(std::span<const double> agent, const EffectiveChannel& eff);

std::vector<double> sinr_per_ue(const CMatrix& h_eff, const CMatrix& b, double noise_power_w);
std::vector<double> sinr_per_ue(const CMatrix& h, const CMatrix& f, const CMatrix& b, double noise_power_w);

std::vector<double> rate_per_ue(std::span<const double> sinr);

struct FairnessSpec {
    enum class Mode { alpha, max_min };

    Mode mode = Mode::alpha;
    double alpha = 0.0;

    static FairnessSpec alpha_fair(double alpha);
    static FairnessSpec max_min() { return {Mode::max_min, 0.0}; }

    // "maxmin" or the shortest round-tripping decimal form of alpha.
    std::string label() const;
    // Accepts "maxmin"/"max_min"/"inf" or a non-negative number. Throws std::invalid_argument.
    static FairnessSpec parse(std::string_view text);

    friend bool operator==(const FairnessSpec&, const FairnessSpec&) = default;
};

double utility(std::span<const double> rates, const FairnessSpec& spec);

struct AgentEvaluation {
    BbPrecoder precoder;
    std::vector<double> sinr;
    std::vector<double> rates;
    double utility = 0.0;
};

AgentEvaluation evaluate_agent(std::span<const double> agent, const EffectiveChannel& eff, const FairnessSpec& spec);

// normalization -> bb_precoder -> SINR -> rate -> utility.
double objective(std::span<const double> agent, const EffectiveChannel& eff, const FairnessSpec& spec);

} // namespace fairhp

#endif // FAIRHP_BB_STAGE_HPP
