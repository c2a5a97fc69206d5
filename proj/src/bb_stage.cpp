// SPDX-License-Identifier: Apache-2.0

#include "fairhp/bb_stage.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fairhp {

CMatrix effective_channel(const CMatrix& h, const CMatrix& f) { return matmul(h, f); }

EffectiveChannel make_effective_channel(const CMatrix& h, const CMatrix& f, double noise_power_w, double total_power_w) {
    if (!(noise_power_w > 0.0))
        throw DomainError("make_effective_channel: noise power must be positive");
    if (!(total_power_w > 0.0))
        throw DomainError("make_effective_channel: transmit power must be positive");
    return {effective_channel(h, f), noise_power_w, total_power_w};
}

SearchAgent::SearchAgent(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty() || values_.size() % 2 != 0)
        throw DomainError("SearchAgent: length must be 2K with K >= 1");
    for (const double v : values_)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("SearchAgent: component outside [0, 1]");
}

SearchAgent SearchAgent::uniform(std::size_t ue_count, double value) {
    return SearchAgent(std::vector<double>(2 * ue_count, value));
}

Normalization normalization(std::span<const double> agent, double p_t_w) {
    const std::size_t K = agent.size() / 2;
    double sp = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        sp += std::max(agent[k], kAgentFloor);
        sb += std::max(agent[K + k], kAgentFloor);
    }
    return {p_t_w / sp, p_t_w / sb};
}

BbPrecoder bb_precoder(std::span<const double> agent, const EffectiveChannel& eff) {
    const std::size_t K = eff.ue_count();
    const std::size_t N = eff.rf_chains();
    if (agent.size() != 2 * K)
        throw DimensionError("bb_precoder: agent length " + std::to_string(agent.size()) + " for K = " +
                             std::to_string(K));
    const Normalization eps = normalization(agent, eff.total_power_w);
    const CMatrix& H = eff.h_eff;

    BbPrecoder out;
    out.powers.resize(K);
    out.regularizers.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
        out.powers[k] = eps.eps1 * std::max(agent[k], kAgentFloor);
        out.regularizers[k] = eps.eps2 * std::max(agent[K + k], kAgentFloor);
    }

    // G = I + sum_u c_u H_u^H H_u, Hermitian; fill the upper triangle and mirror.
    CMatrix G = CMatrix::identity(N);
    for (std::size_t u = 0; u < K; ++u) {
        const double c = out.regularizers[u] / eff.noise_power_w;
        const auto hu = H.row(u);
        for (std::size_t i = 0; i < N; ++i) {
            const Complex ci = c * std::conj(hu[i]);
            for (std::size_t j = i; j < N; ++j)
                G(i, j) += ci * hu[j];
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        G(i, i) = G(i, i).real();
        for (std::size_t j = i + 1; j < N; ++j)
            G(j, i) = std::conj(G(i, j));
    }

    const LuDecomposition lu(G);
    out.b = CMatrix(N, K);
    std::vector<Complex> d(N);
    for (std::size_t k = 0; k < K; ++k) {
        const auto hk = H.row(k);
        for (std::size_t i = 0; i < N; ++i)
            d[i] = std::conj(hk[i]);
        lu.solve_in_place(d);
        const double len = norm2(d);
        const double scale = len > 0.0 ? std::sqrt(out.powers[k]) / len : 0.0;
        for (std::size_t i = 0; i < N; ++i)
            out.b(i, k) = scale * d[i];
    }
    return out;
}

std::vector<double> sinr_per_ue(const CMatrix& h_eff, const CMatrix& b, double noise_power_w) {
    if (h_eff.cols() != b.rows() || h_eff.rows() != b.cols())
        throw DimensionError("sinr_per_ue: effective channel and precoder shapes disagree");
    const CMatrix gains = matmul(h_eff, b); // [k, u] = h_k^T F b_u
    const std::size_t K = h_eff.rows();
    std::vector<double> sinr(K);
    for (std::size_t k = 0; k < K; ++k) {
        double interference = 0.0;
        for (std::size_t u = 0; u < K; ++u)
            if (u != k)
                interference += std::norm(gains(k, u));
        sinr[k] = std::norm(gains(k, k)) / (interference + noise_power_w);
    }
    return sinr;
}

std::vector<double> sinr_per_ue(const CMatrix& h, const CMatrix& f, const CMatrix& b, double noise_power_w) {
    return sinr_per_ue(effective_channel(h, f), b, noise_power_w);
}

std::vector<double> rate_per_ue(std::span<const double> sinr) {
    std::vector<double> rates(sinr.size());
    std::transform(sinr.begin(), sinr.end(), rates.begin(), [](double s) { return std::log2(1.0 + s); });
    return rates;
}

FairnessSpec FairnessSpec::alpha_fair(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("FairnessSpec: alpha must be finite and non-negative");
    return {Mode::alpha, alpha};
}

std::string FairnessSpec::label() const {
    if (mode == Mode::max_min)
        return "maxmin";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), alpha);
    return std::string(buf, res.ptr);
}

FairnessSpec FairnessSpec::parse(std::string_view text) {
    if (text == "maxmin" || text == "max_min" || text == "inf")
        return max_min();
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("FairnessSpec: cannot parse '" + std::string(text) + "'");
    return alpha_fair(value);
}

double utility(std::span<const double> rates, const FairnessSpec& spec) {
    if (spec.mode == FairnessSpec::Mode::max_min)
        return rates.empty() ? 0.0 : *std::min_element(rates.begin(), rates.end());

    const double a = spec.alpha;
    double total = 0.0;
    if (a == 1.0) {
        for (const double r : rates)
            total += std::log(std::max(r, kRateFloor));
        return total;
    }
    const double e = 1.0 - a;
    for (const double r : rates) {
        const double x = a >= 1.0 ? std::max(r, kRateFloor) : r;
        total += (e == 1.0 ? x : std::pow(x, e)) / e;
    }
    return total;
}

AgentEvaluation evaluate_agent(std::span<const double> agent, const EffectiveChannel& eff, const FairnessSpec& spec) {
    AgentEvaluation ev;
    ev.precoder = bb_precoder(agent, eff);
    ev.sinr = sinr_per_ue(eff.h_eff, ev.precoder.b, eff.noise_power_w);
    ev.rates = rate_per_ue(ev.sinr);
    ev.utility = utility(ev.rates, spec);
    return ev;
}

double objective(std::span<const double> agent, const EffectiveChannel& eff, const FairnessSpec& spec) {
    return evaluate_agent(agent, eff, spec).utility;
}

} // namespace fairhp
