#pragma once

#include <cstdint>
#include <random>

namespace infodist {

// Reproducible random generation contract
// ---------------------------------------
// Streams are split per trial: stream k of master seed s is an mt19937_64
// engine seeded with splitmix64_mix(s + 0x9e3779b97f4a7c15 * (k + 1)).
// Uniform doubles take the top 53 bits of one engine draw, u = (x >> 11) *
// 2^-53, uniform on [0, 1). Standard normal deviates use the Marsaglia polar
// method: draw (u, v) uniform on (-1, 1)^2 until 0 < s = u^2 + v^2 < 1, then
// return u * sqrt(-2 ln(s) / s), caching the companion deviate
// v * sqrt(-2 ln(s) / s) for the next call within the same stream.

/// SplitMix64 finalizer; bijective 64-bit mix used to decorrelate seeds.
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Seed for the k-th derived stream of a master seed.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Standard-normal generator implementing the contract above.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double next_uniform();

    /// One standard normal deviate.
    double next_normal();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace infodist
