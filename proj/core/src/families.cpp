#include "infodist/families.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "infodist/errors.hpp"

namespace infodist {

namespace {

double normal_pdf(double x, double mean, double sigma) {
    const double z = (x - mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

// Mass of normal(mean, sigma^2) outside [lo, hi].
double normal_tail_outside(double lo, double hi, double mean, double sigma) {
    const double inv = 1.0 / (sigma * std::numbers::sqrt2);
    const double lower = 0.5 * std::erfc((mean - lo) * inv);
    const double upper = 0.5 * std::erfc((hi - mean) * inv);
    return lower + upper;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_alpha(const FamilySpec& family, double alpha) {
    if (!alpha_in_range(family, alpha)) {
        throw std::invalid_argument("alpha out of range for family " +
                                    std::string(family_name(family.kind)));
    }
}

}  // namespace

FamilySpec gaussian_location(double sigma) {
    require_finite(sigma, "sigma");
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("gaussian_location: sigma must be positive");
    }
    FamilySpec f;
    f.kind = FamilyKind::gaussian_location;
    f.sigma = sigma;
    return f;
}

FamilySpec gaussian_scale(double mu) {
    require_finite(mu, "mu");
    FamilySpec f;
    f.kind = FamilyKind::gaussian_scale;
    f.mu = mu;
    return f;
}

FamilySpec two_gaussian_mixture(double separation, double sigma, double weight) {
    require_finite(separation, "separation");
    require_finite(sigma, "sigma");
    require_finite(weight, "weight");
    if (!(separation > 0.0)) {
        throw std::invalid_argument("two_gaussian_mixture: separation must be positive");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("two_gaussian_mixture: sigma must be positive");
    }
    if (!(weight > 0.0 && weight < 1.0)) {
        throw std::invalid_argument("two_gaussian_mixture: weight must lie strictly in (0,1)");
    }
    FamilySpec f;
    f.kind = FamilyKind::two_gaussian_mixture;
    f.separation = separation;
    f.sigma = sigma;
    f.weight = weight;
    return f;
}

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::gaussian_location: return "gaussian-location";
        case FamilyKind::gaussian_scale: return "gaussian-scale";
        case FamilyKind::two_gaussian_mixture: return "two-gaussian-mixture";
    }
    return "unknown";
}

bool alpha_in_range(const FamilySpec& family, double alpha) {
    if (!std::isfinite(alpha)) {
        return false;
    }
    return family.kind != FamilyKind::gaussian_scale || alpha > 0.0;
}

double density_at(const FamilySpec& family, double alpha, double x) {
    switch (family.kind) {
        case FamilyKind::gaussian_location:
            return normal_pdf(x, alpha, family.sigma);
        case FamilyKind::gaussian_scale:
            return normal_pdf(x, family.mu, alpha);
        case FamilyKind::two_gaussian_mixture: {
            const double half = 0.5 * family.separation;
            return family.weight * normal_pdf(x, alpha - half, family.sigma) +
                   (1.0 - family.weight) * normal_pdf(x, alpha + half, family.sigma);
        }
    }
    return 0.0;
}

double tail_mass(const FamilySpec& family, double alpha, const Grid& grid) {
    switch (family.kind) {
        case FamilyKind::gaussian_location:
            return normal_tail_outside(grid.x_min, grid.x_max, alpha, family.sigma);
        case FamilyKind::gaussian_scale:
            return normal_tail_outside(grid.x_min, grid.x_max, family.mu, alpha);
        case FamilyKind::two_gaussian_mixture: {
            const double half = 0.5 * family.separation;
            return family.weight *
                       normal_tail_outside(grid.x_min, grid.x_max, alpha - half, family.sigma) +
                   (1.0 - family.weight) *
                       normal_tail_outside(grid.x_min, grid.x_max, alpha + half, family.sigma);
        }
    }
    return 1.0;
}

DensityVector evaluate_density(const FamilySpec& family, double alpha, const Grid& grid) {
    require_alpha(family, alpha);
    const double truncated = tail_mass(family, alpha, grid);
    if (truncated >= kCoverageTolerance) {
        char mass[32];
        std::snprintf(mass, sizeof(mass), "%.3g", truncated);
        throw domain_coverage_error("grid truncates " + std::string(mass) +
                                    " probability mass for family " +
                                    std::string(family_name(family.kind)));
    }
    std::vector<double> samples(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        samples[i] = density_at(family, alpha, grid.point(i));
    }
    return renormalize(samples, grid);
}

WaveVector evaluate_wavefunction(const FamilySpec& family, double alpha, const Grid& grid) {
    const DensityVector p = evaluate_density(family, alpha, grid);
    WaveVector psi;
    psi.grid = grid;
    psi.values.resize(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        psi.values[i] = std::sqrt(p.values[i]);
    }
    return psi;
}

std::vector<double> alpha_derivative_density(const FamilySpec& family, double alpha,
                                             const Grid& grid, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("alpha_derivative_density: h must be positive and finite");
    }
    if (!alpha_in_range(family, alpha - h) || !alpha_in_range(family, alpha + h)) {
        throw std::invalid_argument("alpha_derivative_density: alpha +- h out of range");
    }
    const DensityVector plus = evaluate_density(family, alpha + h, grid);
    const DensityVector minus = evaluate_density(family, alpha - h, grid);
    std::vector<double> deriv(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        deriv[i] = (plus.values[i] - minus.values[i]) / (2.0 * h);
    }
    return deriv;
}

FisherValue fisher_information(const FamilySpec& family, double alpha, const Grid& grid,
                               double h) {
    const std::vector<double> dp = alpha_derivative_density(family, alpha, grid, h);
    const DensityVector p = evaluate_density(family, alpha, grid);
    std::vector<double> integrand(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        // Excluding sub-floor points avoids 0/0; the excluded mass is far
        // below every tolerance on admissible grids.
        integrand[i] = p.values[i] < kDensityFloor ? 0.0 : dp[i] * dp[i] / p.values[i];
    }
    return FisherValue{integrate(grid, integrand), FisherMethod::quadrature};
}

std::optional<FisherValue> analytic_fisher(const FamilySpec& family, double alpha) {
    switch (family.kind) {
        case FamilyKind::gaussian_location:
            return FisherValue{1.0 / (family.sigma * family.sigma), FisherMethod::analytic};
        case FamilyKind::gaussian_scale:
            if (!alpha_in_range(family, alpha)) {
                return std::nullopt;
            }
            return FisherValue{2.0 / (alpha * alpha), FisherMethod::analytic};
        case FamilyKind::two_gaussian_mixture:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace infodist
