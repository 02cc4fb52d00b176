// Acceptance gate for the library and tool. Each criterion prints exactly
// one PASS/FAIL line on stdout; diagnostics go to stderr. Exits nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_run.hpp"
#include "infodist/cramer_rao.hpp"
#include "infodist/errors.hpp"
#include "infodist/expansion.hpp"
#include "infodist/hilbert.hpp"

using namespace infodist;

namespace {

double rel_err(double actual, double expected) {
    return std::abs(actual - expected) / std::abs(expected);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool expect(bool condition, std::ostream& log, const std::string& detail) {
    if (!condition) log << "    " << detail << "\n";
    return condition;
}

const Grid kGrid = make_grid(-12.0, 12.0, 4801);
const LadderSpec kLadder = make_ladder(1e-1, 1e-3, 1.7782794100389228, false);
const LadderSpec kMirroredLadder = make_ladder(1e-1, 1e-3, 1.7782794100389228, true);
const WeightPair kWeights = make_weights(0.3, 0.7);

bool check_report(const std::vector<CoefficientFit>& fits, double tolerance,
                  const std::string& tag, std::ostream& log) {
    const double predicted[] = {1.0, 0.125, 0.25, 0.105, 0.25, 0.25, 0.25};
    bool ok = fits.size() == 7;
    for (std::size_t k = 0; k < fits.size(); ++k) {
        std::ostringstream detail;
        detail << tag << " " << measure_name(fits[k].measure) << ": c_hat=" << fits[k].c_hat
               << " predicted=" << fits[k].predicted_c << " residual=" << fits[k].residual;
        ok &= expect(fits[k].predicted_c == predicted[k] && fits[k].residual < tolerance, log,
                     detail.str());
    }
    return ok;
}

bool coefficients_match_gaussian_location(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const auto fits = coefficient_report(gaussian_location(1.0), 0.0, kLadder, kWeights, kGrid);
    bool ok = check_report(fits, 0.01, "gaussian_location", log);
    const double elapsed = seconds_since(start);
    ok &= expect(elapsed < 5.0, log, "runtime " + std::to_string(elapsed) + "s exceeds 5s");
    return ok;
}

bool coefficients_match_other_families(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const auto scale_fits =
        coefficient_report(gaussian_scale(0.0), 1.0, kLadder, kWeights, kGrid);
    bool ok = check_report(scale_fits, 0.01, "gaussian_scale", log);
    const auto mixture_fits = coefficient_report(two_gaussian_mixture(1.0, 1.0, 0.3), 0.0,
                                                 kLadder, kWeights, kGrid);
    ok &= check_report(mixture_fits, 0.02, "two_gaussian_mixture", log);
    const double elapsed = seconds_since(start);
    ok &= expect(elapsed < 30.0, log, "runtime " + std::to_string(elapsed) + "s exceeds 30s");
    return ok;
}

bool convergence_is_second_order(std::ostream& log) {
    const auto fits = coefficient_report(gaussian_location(1.0), 0.0, kLadder, kWeights, kGrid);
    bool ok = true;
    for (const CoefficientFit& fit : fits) {
        std::ostringstream detail;
        detail << measure_name(fit.measure) << ": convergence_order=" << fit.convergence_order;
        ok &= expect(fit.convergence_order > 1.95 && fit.convergence_order < 2.05, log,
                     detail.str());
    }
    return ok;
}

bool decreasing_profile(const std::vector<AsymmetryPoint>& profile, double min_signal,
                        const std::string& tag, std::ostream& log) {
    bool ok = expect(profile.size() >= 4, log, tag + ": profile too short");
    ok &= expect(profile.front().ratio > min_signal, log,
                 tag + ": no first-order signal at the largest rung");
    for (std::size_t k = 1; k < profile.size(); ++k) {
        std::ostringstream detail;
        detail << tag << ": ratio rose from " << profile[k - 1].ratio << " to "
               << profile[k].ratio << " at delta=" << profile[k].delta_alpha;
        ok &= expect(profile[k].ratio < profile[k - 1].ratio, log, detail.str());
    }
    return ok;
}

bool stability_and_asymmetry_decay(std::ostream& log) {
    bool ok = true;
    const FamilySpec symmetric_families[] = {gaussian_location(1.0),
                                             two_gaussian_mixture(1.0, 1.0, 0.5)};
    for (const FamilySpec& family : symmetric_families) {
        const auto records = sweep_distances(family, 0.0, kMirroredLadder, kWeights, kGrid);
        for (const Measure measure : kAllMeasures) {
            const double stability = first_order_stability(records, measure);
            std::ostringstream detail;
            detail << family_name(family.kind) << " " << measure_name(measure)
                   << ": first_order_stability=" << stability;
            ok &= expect(stability < 1e-8, log, detail.str());
        }
    }

    // Measures without the p <-> q symmetry keep a genuine cubic term for an
    // asymmetric profile; their asymmetry ratio must fall linearly with the
    // offset. The remaining measures are exactly even in the offset for any
    // location family, so only noise is left there.
    const auto skewed = sweep_distances(two_gaussian_mixture(1.0, 1.0, 0.3), 0.0,
                                        kMirroredLadder, kWeights, kGrid);
    ok &= decreasing_profile(first_order_asymmetry(skewed, Measure::J0), 1e-3, "mixture J0",
                             log);
    ok &= decreasing_profile(first_order_asymmetry(skewed, Measure::JSD_weighted), 1e-4,
                             "mixture JSD_weighted", log);
    return ok;
}

bool closed_form_oracles(std::ostream& log) {
    bool ok = true;
    const auto p = evaluate_density(gaussian_location(1.0), 0.0, kGrid);
    const auto q = evaluate_density(gaussian_location(1.0), 0.5, kGrid);

    const double kl = kl_divergence(p, q);
    ok &= expect(rel_err(kl, 0.125) < 1e-6, log, "KL(N(0,1) || N(0.5,1)) = " + std::to_string(kl));

    const double entropy = shannon_entropy(p);
    const double entropy_expected = 0.5 * std::log(2.0 * 3.14159265358979323846 * std::exp(1.0));
    ok &= expect(rel_err(entropy, entropy_expected) < 1e-6, log,
                 "gaussian entropy = " + std::to_string(entropy));

    const auto psi0 = evaluate_wavefunction(gaussian_location(1.0), 0.0, kGrid);
    const auto psi2 = evaluate_wavefunction(gaussian_location(1.0), 2.0, kGrid);
    const double ov = overlap(psi0, psi2).value;
    ok &= expect(rel_err(ov, std::exp(-0.5)) < 1e-6,
                 log, "overlap at offset 2 = " + std::to_string(ov));

    const FisherValue location = fisher_information(gaussian_location(1.0), 0.0, kGrid);
    ok &= expect(location.method == FisherMethod::quadrature &&
                     rel_err(location.value, 1.0) < 1e-6,
                 log, "location Fisher = " + std::to_string(location.value));

    const FisherValue scale = fisher_information(gaussian_scale(0.0), 1.0, kGrid);
    ok &= expect(scale.method == FisherMethod::quadrature && rel_err(scale.value, 2.0) < 1e-6,
                 log, "scale Fisher = " + std::to_string(scale.value));
    return ok;
}

DensityVector random_density(std::mt19937_64& rng, const Grid& grid) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int components = 2 + static_cast<int>(rng() % 2);
    std::vector<double> weight(components), mean(components), sd(components);
    for (int c = 0; c < components; ++c) {
        weight[c] = 0.1 + 0.9 * unit(rng);
        mean[c] = -3.0 + 6.0 * unit(rng);
        sd[c] = 0.5 + 1.5 * unit(rng);
    }
    std::vector<double> samples(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.point(i);
        double value = 0.0;
        for (int c = 0; c < components; ++c) {
            const double z = (x - mean[c]) / sd[c];
            value += weight[c] * std::exp(-0.5 * z * z) / sd[c];
        }
        samples[static_cast<std::size_t>(i)] = value;
    }
    return renormalize(samples, grid);
}

bool jensen_shannon_structure(std::ostream& log) {
    const Grid grid = make_grid(-16.0, 16.0, 1601);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double ln2 = std::log(2.0);
    bool ok = true;
    int violations = 0;
    for (int trial = 0; trial < 1000 && violations < 5; ++trial) {
        const DensityVector p = random_density(rng, grid);
        const DensityVector q = random_density(rng, grid);
        const DensityVector r = random_density(rng, grid);

        const double j1_value = j1(p, q);
        const double even_jsd = jsd_weighted(p, q, WeightPair{0.5, 0.5});
        if (!expect(std::abs(even_jsd - 0.5 * j1_value) < 1e-12, log,
                    "equal-weight JSD departed from half J1 at trial " + std::to_string(trial))) {
            ok = false;
            ++violations;
        }
        const double j1_from_j0 = j0(p, q) + j0(q, p);
        if (!expect(std::abs(j1_value - j1_from_j0) < 1e-10, log,
                    "J1 forms disagree at trial " + std::to_string(trial))) {
            ok = false;
            ++violations;
        }
        const double pi1 = 0.05 + 0.9 * unit(rng);
        if (!expect(jsd_weighted(p, q, make_weights(pi1, 1.0 - pi1)) <= ln2 + 1e-12, log,
                    "weighted JSD exceeded ln 2 at trial " + std::to_string(trial))) {
            ok = false;
            ++violations;
        }
        const double direct = jsd_metric(p, r);
        const double detour = jsd_metric(p, q) + jsd_metric(q, r);
        if (!expect(direct <= detour + 1e-10, log,
                    "metric triangle inequality failed at trial " + std::to_string(trial))) {
            ok = false;
            ++violations;
        }
    }
    return ok;
}

bool estimator_efficiency(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    EstimationConfig config;
    config.family = gaussian_location(1.0);
    config.alpha_true = 0.0;
    config.samples_per_trial = 1000;
    config.trials = 10000;
    config.seed = 12345;

    const EstimationReport report = simulate_estimation(config);
    const double normalized = report.mean_square_error * 1000.0 * report.fisher_per_sample;
    bool ok = expect(normalized > 0.95 && normalized < 1.05, log,
                     "e^2 N I = " + std::to_string(normalized));

    const EstimationReport rerun = simulate_estimation(config);
    ok &= expect(report.mean_estimate == rerun.mean_estimate &&
                     report.mean_square_error == rerun.mean_square_error &&
                     report.efficiency == rerun.efficiency,
                 log, "rerun with the same seed changed the report");

    cli::RunConfig cli_config;
    cli_config.command = cli::Command::cramer_rao;
    cli_config.family = gaussian_location(1.0);
    cli_config.samples = 100;
    cli_config.trials = 1000;
    cli_config.seed = 42;
    cli_config.format = cli::OutputFormat::json;
    ok &= expect(cli::render(cli_config) == cli::render(cli_config), log,
                 "rendered reports are not byte-identical");

    struct BoundCase {
        double sigma;
        double alpha;
        std::uint64_t samples;
        std::uint64_t trials;
        std::uint64_t seed;
    };
    const BoundCase cases[] = {
        {1.0, 0.0, 1000, 10000, 12345}, {2.0, 5.0, 1, 100000, 1}, {0.5, -3.0, 10, 40000, 2}};
    for (const BoundCase& c : cases) {
        EstimationConfig bound_config;
        bound_config.family = gaussian_location(c.sigma);
        bound_config.alpha_true = c.alpha;
        bound_config.samples_per_trial = c.samples;
        bound_config.trials = c.trials;
        bound_config.seed = c.seed;
        const EstimationReport r = simulate_estimation(bound_config);
        const double slack = 1.0 - 3.0 / std::sqrt(static_cast<double>(c.trials));
        std::ostringstream detail;
        detail << "bound violated: e^2=" << r.mean_square_error
               << " allowed floor=" << slack * r.cramer_rao_bound;
        ok &= expect(r.mean_square_error >= slack * r.cramer_rao_bound, log, detail.str());
    }

    const double elapsed = seconds_since(start);
    ok &= expect(elapsed < 10.0, log, "runtime " + std::to_string(elapsed) + "s exceeds 10s");
    return ok;
}

bool metric_cross_checks(std::ostream& log) {
    bool ok = true;
    const FamilySpec families[] = {gaussian_location(1.0), gaussian_scale(0.0),
                                   two_gaussian_mixture(1.0, 1.0, 0.3)};
    const double base_alpha[] = {0.0, 1.0, 0.0};
    std::vector<double> location_relative_gaps;

    for (int f = 0; f < 3; ++f) {
        const WaveVector psi0 = evaluate_wavefunction(families[f], base_alpha[f], kGrid);
        for (const double delta : kLadder.offsets()) {
            const WaveVector psi =
                evaluate_wavefunction(families[f], base_alpha[f] + delta, kGrid);
            const double ov = overlap(psi0, psi).value;
            const double euclid = euclidean_sq(psi0, psi);
            const double woot = wootters(psi0, psi);
            const double fubini = fubini_study(psi0, psi);

            std::ostringstream tag;
            tag << family_name(families[f].kind) << " delta=" << delta;
            ok &= expect(std::abs(euclid - 2.0 * (1.0 - ov)) < 1e-10, log,
                         tag.str() + ": euclidean_sq departs from 2(1-overlap)");
            ok &= expect(fubini <= woot + 1e-12, log,
                         tag.str() + ": fubini_study exceeded wootters");

            if (f == 0 && woot - euclid >= 1e-13) {
                location_relative_gaps.push_back((woot - euclid) / euclid);
            }
        }
    }

    // The gap between the Wootters and Euclidean values is the next expansion
    // order, so its share of the distance shrinks by ratio^2 per rung. Rungs
    // with sub-1e-13 absolute gaps sit at quadrature noise and are skipped.
    ok &= expect(location_relative_gaps.size() >= 4, log,
                 "too few rungs carry a measurable wootters-euclidean gap");
    for (std::size_t k = 1; k < location_relative_gaps.size(); ++k) {
        const double shrink = location_relative_gaps[k - 1] / location_relative_gaps[k];
        std::ostringstream detail;
        detail << "relative gap shrink factor " << shrink << " at step " << k
               << " outside [2.4, 4.0]";
        ok &= expect(shrink > 2.4 && shrink < 4.0, log, detail.str());
    }
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "coefficient recovery, gaussian location defaults", coefficients_match_gaussian_location},
        {2, "coefficient recovery, scale and mixture families", coefficients_match_other_families},
        {3, "second-order convergence", convergence_is_second_order},
        {4, "first-order stability and asymmetry decay", stability_and_asymmetry_decay},
        {5, "closed-form oracles", closed_form_oracles},
        {6, "Jensen-Shannon structure", jensen_shannon_structure},
        {7, "estimator efficiency against the variance bound", estimator_efficiency},
        {8, "metric cross-checks", metric_cross_checks},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        bool ok = false;
        try {
            ok = criterion.run(std::cerr);
        } catch (const std::exception& e) {
            std::cerr << "    unexpected exception: " << e.what() << "\n";
        }
        if (!ok) ++failures;
        std::cout << "criterion " << criterion.id << ": " << (ok ? "PASS" : "FAIL") << " ("
                  << criterion.label << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
