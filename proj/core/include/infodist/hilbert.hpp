#pragma once

#include "infodist/grid.hpp"

namespace infodist {

/// L2 inner product of two normalized real wavefunctions, cos(gamma) for the
/// angle gamma between the rays. `raw` keeps the unclamped quadrature value;
/// `value` is clamped into [-1, 1] so arccos stays defined.
struct OverlapValue {
    double value = 0.0;
    double raw = 0.0;
};

/// Quadrature of psi1 * psi2. Throws std::invalid_argument on grid mismatch.
OverlapValue overlap(const WaveVector& psi1, const WaveVector& psi2);

/// Squared Euclidean distance: quadrature of (psi2 - psi1)^2. Also equals
/// 2 (1 - overlap) up to quadrature arrangement.
double euclidean_sq(const WaveVector& psi1, const WaveVector& psi2);

/// Wootters statistical distance squared, [arccos(overlap)]^2.
double wootters(const WaveVector& psi1, const WaveVector& psi2);

/// Fubini-Study distance 1 - overlap^2, in [0, 1]. Sign-invariant, unlike
/// the Euclidean and Wootters distances.
double fubini_study(const WaveVector& psi1, const WaveVector& psi2);

}  // namespace infodist
