#include "infodist/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "infodist/errors.hpp"

namespace infodist {

namespace {

// Kahan-compensated accumulator; keeps Simpson sums accurate to a few ulps
// regardless of point count.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double term) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

Grid make_grid(double x_min, double x_max, int n_points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("make_grid: bounds must be finite");
    }
    if (!(x_min < x_max)) {
        throw std::invalid_argument("make_grid: x_min must be smaller than x_max");
    }
    if (n_points < 3 || n_points % 2 == 0) {
        throw std::invalid_argument(
            "make_grid: n_points must be odd and at least 3 (composite Simpson)");
    }
    Grid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n_points = n_points;
    g.spacing = (x_max - x_min) / static_cast<double>(n_points - 1);
    return g;
}

double integrate(const Grid& grid, std::span<const double> samples) {
    const int n = grid.n_points;
    if (static_cast<int>(samples.size()) != n) {
        throw std::invalid_argument("integrate: sample count does not match grid");
    }
    CompensatedSum acc;
    for (int i = 0; i < n; ++i) {
        const double v = samples[i];
        if (!std::isfinite(v)) {
            throw std::invalid_argument("integrate: non-finite sample");
        }
        const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc.add(w * v);
    }
    return acc.sum * grid.spacing / 3.0;
}

void validate(const WaveVector& psi) {
    if (static_cast<int>(psi.values.size()) != psi.grid.n_points) {
        throw invalid_state_error("WaveVector: sample count does not match grid");
    }
    std::vector<double> sq(psi.values.size());
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        if (!std::isfinite(psi.values[i])) {
            throw invalid_state_error("WaveVector: non-finite sample");
        }
        sq[i] = psi.values[i] * psi.values[i];
    }
    const double norm = integrate(psi.grid, sq);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw invalid_state_error("WaveVector: squared norm deviates from unity");
    }
}

void validate(const DensityVector& p) {
    if (static_cast<int>(p.values.size()) != p.grid.n_points) {
        throw invalid_state_error("DensityVector: sample count does not match grid");
    }
    for (double v : p.values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw invalid_state_error("DensityVector: samples must be finite and nonnegative");
        }
    }
    const double mass = integrate(p.grid, p.values);
    if (std::abs(mass - 1.0) > kNormTolerance) {
        throw invalid_state_error("DensityVector: integral deviates from unity");
    }
}

DensityVector density_from_wavefunction(const WaveVector& psi) {
    validate(psi);
    DensityVector p;
    p.grid = psi.grid;
    p.values.resize(psi.values.size());
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        p.values[i] = psi.values[i] * psi.values[i];
    }
    return p;
}

DensityVector renormalize(std::span<const double> samples, const Grid& grid) {
    if (static_cast<int>(samples.size()) != grid.n_points) {
        throw std::invalid_argument("renormalize: sample count does not match grid");
    }
    bool any_positive = false;
    for (double v : samples) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("renormalize: samples must be finite and nonnegative");
        }
        any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) {
        throw degenerate_input_error("renormalize: all samples are zero");
    }
    const double mass = integrate(grid, samples);
    if (!(mass > 0.0)) {
        throw degenerate_input_error("renormalize: samples integrate to zero");
    }
    DensityVector p;
    p.grid = grid;
    p.values.resize(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        p.values[i] = samples[i] / mass;
    }
    return p;
}

}  // namespace infodist
