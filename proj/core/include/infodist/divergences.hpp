#pragma once

#include "infodist/grid.hpp"

namespace infodist {

/// Mixture weights (pi1, pi2): both strictly positive, summing to one
/// within 1e-12.
struct WeightPair {
    double pi1 = 0.5;
    double pi2 = 0.5;
};

WeightPair make_weights(double pi1, double pi2);

/// Differential Shannon entropy -integral p ln p, natural log. Points with
/// p below kDensityFloor contribute zero.
double shannon_entropy(const DensityVector& p);

/// Kullback-Leibler divergence integral p ln(p/q). Points where both
/// densities sit below kDensityFloor contribute zero; q below the floor
/// where p is above it raises support_error rather than returning infinity.
/// Quadrature may leave tiny negative noise; values are reported raw.
double kl_divergence(const DensityVector& p, const DensityVector& q);

/// kl_divergence(p,q) + kl_divergence(q,p).
double symmetrized_kl(const DensityVector& p, const DensityVector& q);

/// KL of p against the equal-weight midpoint mixture (p+q)/2. Always finite:
/// the mixture dominates p wherever p is above the floor.
double j0(const DensityVector& p, const DensityVector& q);

/// Symmetric Jensen divergence 2 S[(p+q)/2] - S[p] - S[q]; equals
/// j0(p,q) + j0(q,p) up to quadrature arrangement.
double j1(const DensityVector& p, const DensityVector& q);

/// Weighted Jensen-Shannon divergence
/// S[pi1 p + pi2 q] - pi1 S[p] - pi2 S[q]; bounded by ln 2 for equal
/// weights, where it equals j1/2.
double jsd_weighted(const DensityVector& p, const DensityVector& q, const WeightPair& w);

/// sqrt of the equal-weight JSD (negative quadrature noise clamped to zero
/// before the root); a metric with values in [0, sqrt(ln 2)].
double jsd_metric(const DensityVector& p, const DensityVector& q);

}  // namespace infodist
