// SPDX-License-Identifier: Apache-2.0
//
// Deterministic, splittable random streams. A child stream is identified by
// (master seed, realization index, purpose tag); streams never share state, so
// realizations can run on any worker in any order and still reproduce exactly.

#ifndef FAIRHP_RANDOM_HPP
#define FAIRHP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace fairhp {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// FNV-1a over the tag bytes.
std::uint64_t hash_tag(std::string_view tag) noexcept;

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index, std::string_view tag) noexcept;

/// Sequential stream. Distributions are implemented here rather than through
/// <random>'s distribution classes so the sequence is identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng child(std::uint64_t master_seed, std::uint64_t index, std::string_view tag) {
        return Rng(derive_seed(master_seed, index, tag));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Requires n > 0.
    std::uint64_t below(std::uint64_t n);

    // Standard normal (Box-Muller, one draw per call, no cached spare).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace fairhp

#endif // FAIRHP_RANDOM_HPP
