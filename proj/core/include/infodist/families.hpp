#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "infodist/grid.hpp"

namespace infodist {

// Default step for central finite differences in alpha. Chosen so the O(h^2)
// truncation error sits far below the delta-alpha^2 signals the expansion
// harness measures, and independent of any sweep offset.
inline constexpr double kDefaultFdStep = 1e-5;

// Maximum probability mass a grid may truncate before a state is rejected.
inline constexpr double kCoverageTolerance = 1e-12;

enum class FamilyKind {
    gaussian_location,    // density = normal(alpha, sigma^2)
    gaussian_scale,       // density = normal(mu, alpha^2), alpha > 0
    two_gaussian_mixture  // w*normal(alpha - s/2, sigma^2) + (1-w)*normal(alpha + s/2, sigma^2)
};

/// A named wavefunction family psi_alpha(x). The wavefunction is the
/// positive square root of the density; all members are real-valued.
struct FamilySpec {
    FamilyKind kind = FamilyKind::gaussian_location;
    double sigma = 1.0;       // gaussian_location, two_gaussian_mixture
    double mu = 0.0;          // gaussian_scale
    double separation = 1.0;  // two_gaussian_mixture
    double weight = 0.5;      // two_gaussian_mixture, strictly inside (0,1)
};

FamilySpec gaussian_location(double sigma);
FamilySpec gaussian_scale(double mu);
FamilySpec two_gaussian_mixture(double separation, double sigma, double weight);

std::string_view family_name(FamilyKind kind);

enum class FisherMethod { quadrature, analytic };

struct FisherValue {
    double value = 0.0;  // nonnegative, units alpha^(-2)
    FisherMethod method = FisherMethod::quadrature;
};

/// Whether alpha is admissible for the family (gaussian_scale needs alpha > 0).
bool alpha_in_range(const FamilySpec& family, double alpha);

/// Closed-form density of the family at a single point.
double density_at(const FamilySpec& family, double alpha, double x);

/// Probability mass the grid truncates, from the family's closed-form CDF.
double tail_mass(const FamilySpec& family, double alpha, const Grid& grid);

/// Density of the family sampled on the grid and renormalized there.
/// Throws std::invalid_argument for out-of-range alpha and
/// domain_coverage_error when the truncated tail mass exceeds
/// kCoverageTolerance.
DensityVector evaluate_density(const FamilySpec& family, double alpha, const Grid& grid);

/// Wavefunction samples: the positive square root of evaluate_density,
/// hence exactly unit-norm on the grid.
WaveVector evaluate_wavefunction(const FamilySpec& family, double alpha, const Grid& grid);

/// Central finite difference (P_{alpha+h} - P_{alpha-h}) / (2h) per grid point.
std::vector<double> alpha_derivative_density(const FamilySpec& family, double alpha,
                                             const Grid& grid, double h = kDefaultFdStep);

/// Fisher information by quadrature of P * (dlnP/dalpha)^2; grid points with
/// P below kDensityFloor contribute zero.
FisherValue fisher_information(const FamilySpec& family, double alpha, const Grid& grid,
                               double h = kDefaultFdStep);

/// Closed form where one exists: 1/sigma^2 for gaussian_location, 2/alpha^2
/// for gaussian_scale. Absent for the mixture family.
std::optional<FisherValue> analytic_fisher(const FamilySpec& family, double alpha);

}  // namespace infodist
