#include "infodist/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "infodist/errors.hpp"

namespace infodist {

namespace {

void require_shared_grid(const DensityVector& p, const DensityVector& q, const char* what) {
    if (!(p.grid == q.grid)) {
        throw std::invalid_argument(std::string(what) + ": densities live on different grids");
    }
}

}  // namespace

WeightPair make_weights(double pi1, double pi2) {
    if (!std::isfinite(pi1) || !std::isfinite(pi2) || pi1 <= 0.0 || pi2 <= 0.0) {
        throw std::invalid_argument("weights must be finite and strictly positive");
    }
    if (std::abs(pi1 + pi2 - 1.0) > 1e-12) {
        throw std::invalid_argument("weights must sum to one");
    }
    return WeightPair{pi1, pi2};
}

double shannon_entropy(const DensityVector& p) {
    std::vector<double> integrand(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double v = p.values[i];
        integrand[i] = v < kDensityFloor ? 0.0 : -v * std::log(v);
    }
    return integrate(p.grid, integrand);
}

double kl_divergence(const DensityVector& p, const DensityVector& q) {
    require_shared_grid(p, q, "kl_divergence");
    std::vector<double> integrand(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double pv = p.values[i];
        if (pv < kDensityFloor) {
            integrand[i] = 0.0;
            continue;
        }
        const double qv = q.values[i];
        if (qv < kDensityFloor) {
            throw support_error("kl_divergence: second density vanishes where the first does not");
        }
        integrand[i] = pv * std::log(pv / qv);
    }
    return integrate(p.grid, integrand);
}

double symmetrized_kl(const DensityVector& p, const DensityVector& q) {
    return kl_divergence(p, q) + kl_divergence(q, p);
}

double j0(const DensityVector& p, const DensityVector& q) {
    require_shared_grid(p, q, "j0");
    std::vector<double> integrand(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double pv = p.values[i];
        if (pv < kDensityFloor) {
            integrand[i] = 0.0;
            continue;
        }
        const double mid = 0.5 * (pv + q.values[i]);  // >= pv/2 > 0 here
        integrand[i] = pv * std::log(pv / mid);
    }
    return integrate(p.grid, integrand);
}

double j1(const DensityVector& p, const DensityVector& q) {
    require_shared_grid(p, q, "j1");
    DensityVector mid;
    mid.grid = p.grid;
    mid.values.resize(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        mid.values[i] = 0.5 * (p.values[i] + q.values[i]);
    }
    return 2.0 * shannon_entropy(mid) - shannon_entropy(p) - shannon_entropy(q);
}

double jsd_weighted(const DensityVector& p, const DensityVector& q, const WeightPair& w) {
    require_shared_grid(p, q, "jsd_weighted");
    DensityVector mix;
    mix.grid = p.grid;
    mix.values.resize(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        mix.values[i] = w.pi1 * p.values[i] + w.pi2 * q.values[i];
    }
    return shannon_entropy(mix) - w.pi1 * shannon_entropy(p) - w.pi2 * shannon_entropy(q);
}

double jsd_metric(const DensityVector& p, const DensityVector& q) {
    const double jsd = jsd_weighted(p, q, WeightPair{0.5, 0.5});
    return std::sqrt(std::max(jsd, 0.0));
}

}  // namespace infodist
