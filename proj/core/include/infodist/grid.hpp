#pragma once

#include <span>
#include <vector>

namespace infodist {

// Normalization tolerance for unit-norm wavefunctions and unit-integral
// densities. Loose enough for quadrature on a few thousand points, tight
// enough that normalization identities hold numerically.
inline constexpr double kNormTolerance = 1e-9;

// Densities below this floor are treated as zero inside logarithmic
// integrands (their contribution is defined as 0).
inline constexpr double kDensityFloor = 1e-300;

/// Uniform 1D grid on [x_min, x_max]. n_points must be odd so the grid
/// supports composite Simpson quadrature.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;
    double spacing = 0.0;  // (x_max - x_min) / (n_points - 1)

    double point(int i) const { return x_min + i * spacing; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.x_min == b.x_min && a.x_max == b.x_max && a.n_points == b.n_points;
    }
};

/// Real wavefunction samples on a grid; invariant: integrate(values^2) = 1
/// within kNormTolerance and all values finite.
struct WaveVector {
    Grid grid;
    std::vector<double> values;
};

/// Probability density samples on a grid; invariant: integrate(values) = 1
/// within kNormTolerance and values >= 0.
struct DensityVector {
    Grid grid;
    std::vector<double> values;
};

/// Builds a grid, validating bounds and the odd-point requirement.
/// Throws std::invalid_argument on non-finite bounds, x_min >= x_max,
/// or n_points even or < 3.
Grid make_grid(double x_min, double x_max, int n_points);

/// Composite-Simpson approximation of the integral of `samples` over the
/// grid. Exact on polynomials up to degree 3; compensated summation keeps
/// roundoff at the few-ulp level independent of n_points.
/// Throws std::invalid_argument on length mismatch or non-finite samples.
double integrate(const Grid& grid, std::span<const double> samples);

/// Throws invalid_state_error unless the wavefunction norm invariant holds.
void validate(const WaveVector& psi);

/// Throws invalid_state_error unless the density invariant holds.
void validate(const DensityVector& p);

/// Pointwise |psi|^2. Input must satisfy the wavefunction invariant
/// (invalid_state_error otherwise); the result satisfies the density one.
DensityVector density_from_wavefunction(const WaveVector& psi);

/// Divides nonnegative samples by their integral so the result integrates
/// to one. Throws degenerate_input_error when all samples are zero and
/// std::invalid_argument on negative or non-finite samples.
DensityVector renormalize(std::span<const double> samples, const Grid& grid);

}  // namespace infodist
