#include "infodist/cramer_rao.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "infodist/rng.hpp"

namespace infodist {
namespace {

void validate_config(const EstimationConfig& config) {
    if (config.family.kind != FamilyKind::gaussian_location) {
        throw std::invalid_argument(
            "simulate_estimation: only the gaussian-location family is supported");
    }
    if (!std::isfinite(config.alpha_true)) {
        throw std::invalid_argument("simulate_estimation: alpha_true must be finite");
    }
    if (config.samples_per_trial < 1) {
        throw std::invalid_argument("simulate_estimation: samples_per_trial must be >= 1");
    }
    if (config.trials < 100) {
        throw std::invalid_argument("simulate_estimation: trials must be >= 100");
    }
}

EstimationReport report_from_sums(const EstimationConfig& config, double sum_estimates,
                                  double sum_square_errors) {
    const double trials = static_cast<double>(config.trials);
    const double n = static_cast<double>(config.samples_per_trial);
    const double fisher = 1.0 / (config.family.sigma * config.family.sigma);

    EstimationReport report;
    report.mean_estimate = sum_estimates / trials;
    report.mean_square_error = sum_square_errors / trials;
    report.fisher_per_sample = fisher;
    report.cramer_rao_bound = 1.0 / (n * fisher);
    report.efficiency = report.cramer_rao_bound / report.mean_square_error;
    return report;
}

}  // namespace

EstimationReport simulate_estimation(const EstimationConfig& config) {
    return biased_estimator_comparison(config, 1.0).first;
}

std::pair<EstimationReport, EstimationReport> biased_estimator_comparison(
    const EstimationConfig& config, double shrink) {
    validate_config(config);
    if (!(shrink > 0.0) || !(shrink <= 1.0) || !std::isfinite(shrink)) {
        throw std::invalid_argument("biased_estimator_comparison: shrink must be in (0, 1]");
    }

    const double sigma = config.family.sigma;
    double sum_mean = 0.0;
    double sum_sq_mean = 0.0;
    double sum_shrunk = 0.0;
    double sum_sq_shrunk = 0.0;

    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        NormalSampler sampler(stream_seed(config.seed, trial));
        double sum_x = 0.0;
        for (std::uint64_t i = 0; i < config.samples_per_trial; ++i) {
            sum_x += config.alpha_true + sigma * sampler.next_normal();
        }
        const double sample_mean = sum_x / static_cast<double>(config.samples_per_trial);
        const double shrunk = shrink * sample_mean;

        sum_mean += sample_mean;
        sum_sq_mean += (sample_mean - config.alpha_true) * (sample_mean - config.alpha_true);
        sum_shrunk += shrunk;
        sum_sq_shrunk += (shrunk - config.alpha_true) * (shrunk - config.alpha_true);
    }

    return {report_from_sums(config, sum_mean, sum_sq_mean),
            report_from_sums(config, sum_shrunk, sum_sq_shrunk)};
}

}  // namespace infodist
