#include "infodist/rng.hpp"

#include <cmath>

namespace infodist {

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return splitmix64_mix(master_seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1));
}

double NormalSampler::next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalSampler::next_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * scale;
    has_cached_ = true;
    return u * scale;
}

}  // namespace infodist
