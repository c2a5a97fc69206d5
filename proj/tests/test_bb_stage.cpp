// SPDX-License-Identifier: Apache-2.0

#include "fairhp/bb_stage.hpp"
#include "fairhp/errors.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace fairhp;

namespace {

constexpr double kNoise = 1e-3;

EffectiveChannel random_eff(std::size_t K, std::size_t N, std::uint64_t seed, double p_t = 1.0) {
    Rng rng(seed);
    return make_effective_channel(test::random_matrix(K, N, rng), CMatrix::identity(N), kNoise, p_t);
}

std::vector<double> random_agent(std::size_t K, Rng& rng) {
    std::vector<double> a(2 * K);
    for (auto& v : a)
        v = rng.uniform(0.05, 1.0);
    return a;
}

// Straight-line precoder: explicit inverse of the regularized Gram matrix.
CMatrix oracle_precoder(std::span<const double> agent, const EffectiveChannel& eff) {
    const std::size_t K = eff.ue_count(), N = eff.rf_chains();
    double sp = 0, sb = 0;
    for (std::size_t k = 0; k < K; ++k) {
        sp += agent[k];
        sb += agent[K + k];
    }
    CMatrix g = CMatrix::identity(N);
    for (std::size_t u = 0; u < K; ++u) {
        const double beta = eff.total_power_w * agent[K + u] / sb;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                g(i, j) += beta / eff.noise_power_w * std::conj(eff.h_eff(u, i)) * eff.h_eff(u, j);
    }
    const CMatrix gi = inverse(g);
    CMatrix b(N, K);
    for (std::size_t k = 0; k < K; ++k) {
        std::vector<Complex> d(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                d[i] += gi(i, j) * std::conj(eff.h_eff(k, j));
        const double len = norm2(d);
        const double p = eff.total_power_w * agent[k] / sp;
        for (std::size_t i = 0; i < N; ++i)
            b(i, k) = std::sqrt(p) * d[i] / len;
    }
    return b;
}

std::vector<double> oracle_sinr(const CMatrix& h, const CMatrix& b, double noise) {
    std::vector<double> out(h.rows());
    for (std::size_t k = 0; k < h.rows(); ++k) {
        double sig = 0, intf = 0;
        for (std::size_t u = 0; u < b.cols(); ++u) {
            Complex s = 0;
            for (std::size_t i = 0; i < h.cols(); ++i)
                s += h(k, i) * b(i, u);
            (u == k ? sig : intf) += std::norm(s);
        }
        out[k] = sig / (intf + noise);
    }
    return out;
}

} // namespace

TEST_SUITE("bb_stage") {

TEST_CASE("precoder matches the explicit-inverse formula") {
    Rng rng(21);
    for (std::size_t K : {1u, 2u, 4u}) {
        const EffectiveChannel eff = random_eff(K, K + 2, 100 + K, 2.0);
        const auto agent = random_agent(K, rng);
        const BbPrecoder bp = bb_precoder(agent, eff);
        CHECK(frobenius_distance(bp.b, oracle_precoder(agent, eff)) < 1e-10 * frobenius_norm(bp.b));
    }
}

TEST_CASE("powers and regularizers each sum to the transmit power") {
    Rng rng(2);
    const EffectiveChannel eff = random_eff(3, 5, 8, 3.5);
    const auto agent = random_agent(3, rng);
    const BbPrecoder bp = bb_precoder(agent, eff);
    double sp = 0, sb = 0, total = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        sp += bp.powers[k];
        sb += bp.regularizers[k];
        const CVector col = bp.b.column(k);
        const double n = norm2(col.span());
        total += n * n;
        CHECK(n * n == doctest::Approx(bp.powers[k]).epsilon(1e-12));
    }
    CHECK(std::abs(sp - 3.5) <= 1e-9 * 3.5);
    CHECK(std::abs(sb - 3.5) <= 1e-9 * 3.5);
    CHECK(std::abs(total - 3.5) <= 1e-9 * 3.5);
}

TEST_CASE("objective is invariant to rescaling either half of the agent") {
    Rng rng(4);
    const EffectiveChannel eff = random_eff(3, 4, 12, 1.0);
    auto agent = random_agent(3, rng);
    for (auto& v : agent)
        v *= 0.5;
    const FairnessSpec f = FairnessSpec::alpha_fair(1.0);
    const double base = objective(agent, eff, f);
    auto p_scaled = agent, b_scaled = agent;
    for (std::size_t k = 0; k < 3; ++k) {
        p_scaled[k] *= 1.7;
        b_scaled[3 + k] *= 0.3;
    }
    CHECK(std::abs(objective(p_scaled, eff, f) - base) <= 1e-12 * std::max(1.0, std::abs(base)));
    CHECK(std::abs(objective(b_scaled, eff, f) - base) <= 1e-12 * std::max(1.0, std::abs(base)));
}

TEST_CASE("SINR matches a direct triple loop, with and without F") {
    Rng rng(31);
    const CMatrix h = test::random_matrix(3, 10, rng);
    const CMatrix f = test::random_matrix(10, 4, rng);
    const CMatrix b = test::random_matrix(4, 3, rng);
    const auto s1 = sinr_per_ue(h, f, b, kNoise);
    const auto s2 = oracle_sinr(matmul(h, f), b, kNoise);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(s1[k] == doctest::Approx(s2[k]).epsilon(1e-12));
    CHECK_THROWS_AS(sinr_per_ue(h, b, kNoise), DimensionError);
}

TEST_CASE("single UE: maximum-ratio direction at full power") {
    const EffectiveChannel eff = random_eff(1, 6, 55, 0.8);
    for (const double beta : {0.01, 0.5, 1.0}) {
        const std::vector<double> agent = {0.3, beta};
        const AgentEvaluation ev = evaluate_agent(agent, eff, FairnessSpec::alpha_fair(0.0));
        const double g = std::pow(norm2(eff.h_eff.row(0)), 2);
        CHECK(ev.sinr[0] == doctest::Approx(0.8 * g / kNoise).epsilon(1e-10));
        CHECK(ev.rates[0] == doctest::Approx(std::log2(1.0 + 0.8 * g / kNoise)).epsilon(1e-12));
    }
}

TEST_CASE("utility family") {
    const std::vector<double> r = {1.0, 4.0};
    CHECK(utility(r, FairnessSpec::alpha_fair(0.0)) == doctest::Approx(5.0));
    CHECK(utility(r, FairnessSpec::alpha_fair(1.0)) == doctest::Approx(std::log(4.0)));
    CHECK(utility(r, FairnessSpec::alpha_fair(2.0)) == doctest::Approx(-1.25));
    CHECK(utility(r, FairnessSpec::alpha_fair(0.5)) == doctest::Approx(2.0 * (1.0 + 2.0)));
    CHECK(utility(r, FairnessSpec::max_min()) == doctest::Approx(1.0));
    const std::vector<double> z = {0.0, 1.0};
    CHECK(utility(z, FairnessSpec::alpha_fair(0.5)) == doctest::Approx(2.0));
    CHECK(std::isfinite(utility(z, FairnessSpec::alpha_fair(1.0))));
    CHECK(std::isfinite(utility(z, FairnessSpec::alpha_fair(5.0))));
}

TEST_CASE("fairness labels round-trip") {
    for (const char* text : {"0", "1", "2.5", "10", "maxmin"})
        CHECK(FairnessSpec::parse(FairnessSpec::parse(text).label()) == FairnessSpec::parse(text));
    CHECK(FairnessSpec::parse("inf") == FairnessSpec::max_min());
    CHECK_THROWS_AS(FairnessSpec::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(FairnessSpec::parse("abc"), std::invalid_argument);
}

TEST_CASE("agent validation and flooring") {
    CHECK_THROWS_AS(SearchAgent({0.5, 0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(SearchAgent({0.5, 1.5}), DomainError);
    const SearchAgent a = SearchAgent::uniform(3);
    CHECK(a.p_hat().size() == 3);
    CHECK(a.beta_hat()[2] == 0.5);
    const EffectiveChannel eff = random_eff(2, 3, 6);
    const std::vector<double> zeros = {0.0, 0.0, 0.0, 0.0};
    const AgentEvaluation ev = evaluate_agent(zeros, eff, FairnessSpec::alpha_fair(0.0));
    CHECK(std::isfinite(ev.utility));
    CHECK(ev.precoder.powers[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(make_effective_channel(CMatrix(1, 1), CMatrix::identity(1), 0.0, 1.0), DomainError);
}

} // TEST_SUITE
