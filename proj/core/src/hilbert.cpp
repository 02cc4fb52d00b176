#include "infodist/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace infodist {

namespace {

void require_shared_grid(const WaveVector& a, const WaveVector& b, const char* what) {
    if (!(a.grid == b.grid)) {
        throw std::invalid_argument(std::string(what) +
                                    ": wavefunctions live on different grids");
    }
}

}  // namespace

OverlapValue overlap(const WaveVector& psi1, const WaveVector& psi2) {
    require_shared_grid(psi1, psi2, "overlap");
    std::vector<double> integrand(psi1.values.size());
    for (std::size_t i = 0; i < psi1.values.size(); ++i) {
        integrand[i] = psi1.values[i] * psi2.values[i];
    }
    const double raw = integrate(psi1.grid, integrand);
    return OverlapValue{std::clamp(raw, -1.0, 1.0), raw};
}

double euclidean_sq(const WaveVector& psi1, const WaveVector& psi2) {
    require_shared_grid(psi1, psi2, "euclidean_sq");
    std::vector<double> integrand(psi1.values.size());
    for (std::size_t i = 0; i < psi1.values.size(); ++i) {
        const double d = psi2.values[i] - psi1.values[i];
        integrand[i] = d * d;
    }
    return integrate(psi1.grid, integrand);
}

double wootters(const WaveVector& psi1, const WaveVector& psi2) {
    const double gamma = std::acos(overlap(psi1, psi2).value);
    return gamma * gamma;
}

double fubini_study(const WaveVector& psi1, const WaveVector& psi2) {
    const double c = overlap(psi1, psi2).value;
    return 1.0 - c * c;
}

}  // namespace infodist
