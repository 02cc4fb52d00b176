#pragma once

#include <cstdint>
#include <utility>

#include "infodist/families.hpp"

namespace infodist {

/// One Monte-Carlo estimation experiment: `trials` independent batches of
/// `samples_per_trial` draws x = alpha_true + y with y ~ normal(0, sigma^2).
struct EstimationConfig {
    FamilySpec family;           // gaussian_location only
    double alpha_true = 0.0;
    std::uint64_t samples_per_trial = 1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
};

struct EstimationReport {
    double mean_estimate = 0.0;
    double mean_square_error = 0.0;         // e^2, averaged over trials
    double fisher_per_sample = 0.0;         // I for a single draw, 1/sigma^2
    double cramer_rao_bound = 0.0;          // 1 / (N * I)
    double efficiency = 0.0;                // cramer_rao_bound / e^2
};

/// Runs the experiment with the sample mean as estimator. Trial k draws its
/// noise from a NormalSampler seeded with stream_seed(config.seed, k), so
/// identical configs give bit-identical reports.
/// Throws std::invalid_argument for non-gaussian_location families,
/// samples_per_trial < 1, or trials < 100.
EstimationReport simulate_estimation(const EstimationConfig& config);

/// Same draws scored by two estimators: the sample mean, and shrink times the
/// sample mean. Returns {unbiased report, shrunken report}. The shrunken
/// estimator trades bias for variance, so its efficiency can exceed 1 when
/// alpha_true is small; shrink must lie in (0, 1].
std::pair<EstimationReport, EstimationReport> biased_estimator_comparison(
    const EstimationConfig& config, double shrink);

}  // namespace infodist
