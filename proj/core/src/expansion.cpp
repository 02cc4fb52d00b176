#include "infodist/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "infodist/errors.hpp"
#include "infodist/hilbert.hpp"

namespace infodist {

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::K_S: return "K_S";
        case Measure::J0: return "J0";
        case Measure::J1: return "J1";
        case Measure::JSD_weighted: return "JSD_weighted";
        case Measure::euclidean_sq: return "euclidean_sq";
        case Measure::wootters: return "wootters";
        case Measure::fubini_study: return "fubini_study";
    }
    return "unknown";
}

double predicted_coefficient(Measure m, const WeightPair& weights) {
    switch (m) {
        case Measure::K_S: return 1.0;
        case Measure::J0: return 0.125;
        case Measure::J1: return 0.25;
        case Measure::JSD_weighted: return 0.5 * weights.pi1 * weights.pi2;
        case Measure::euclidean_sq: return 0.25;
        case Measure::wootters: return 0.25;
        case Measure::fubini_study: return 0.25;
    }
    return 0.0;
}

std::vector<double> LadderSpec::offsets() const {
    // Nudge against roundoff so an exact power count is not floored away.
    const int count =
        static_cast<int>(std::floor(std::log(delta_max / delta_min) / std::log(ratio) + 1e-9)) + 1;
    std::vector<double> out(count);
    double d = delta_max;
    for (int k = 0; k < count; ++k) {
        out[k] = d;
        d /= ratio;
    }
    return out;
}

LadderSpec make_ladder(double delta_max, double delta_min, double ratio,
                       bool include_negatives) {
    if (!std::isfinite(delta_max) || !std::isfinite(delta_min) || !std::isfinite(ratio)) {
        throw std::invalid_argument("make_ladder: parameters must be finite");
    }
    if (!(delta_min > 0.0) || !(delta_min < delta_max)) {
        throw std::invalid_argument("make_ladder: need 0 < delta_min < delta_max");
    }
    if (!(ratio > 1.0)) {
        throw std::invalid_argument("make_ladder: ratio must exceed one");
    }
    LadderSpec ladder{delta_max, delta_min, ratio, include_negatives};
    if (ladder.offsets().size() < 2) {
        throw std::invalid_argument("make_ladder: ladder must hold at least two rungs");
    }
    return ladder;
}

namespace {

double measure_value(Measure m, const DensityVector& p, const DensityVector& q,
                     const WaveVector& f, const WaveVector& g, const WeightPair& weights) {
    switch (m) {
        case Measure::K_S: return symmetrized_kl(p, q);
        case Measure::J0: return j0(p, q);
        case Measure::J1: return j1(p, q);
        case Measure::JSD_weighted: return jsd_weighted(p, q, weights);
        case Measure::euclidean_sq: return euclidean_sq(f, g);
        case Measure::wootters: return wootters(f, g);
        case Measure::fubini_study: return fubini_study(f, g);
    }
    return 0.0;
}

}  // namespace

std::vector<DistanceRecord> sweep_distances(const FamilySpec& family, double alpha,
                                            std::span<const double> offsets,
                                            const WeightPair& weights, const Grid& grid) {
    const WaveVector psi0 = evaluate_wavefunction(family, alpha, grid);
    const DensityVector p0 = density_from_wavefunction(psi0);

    std::vector<DistanceRecord> records;
    records.reserve(offsets.size() * kAllMeasures.size());
    for (double delta : offsets) {
        const WaveVector psi1 = evaluate_wavefunction(family, alpha + delta, grid);
        const DensityVector p1 = density_from_wavefunction(psi1);
        for (Measure m : kAllMeasures) {
            const double raw = measure_value(m, p0, p1, psi0, psi1, weights);
            DistanceRecord rec;
            rec.delta_alpha = delta;
            rec.measure = m;
            rec.raw_value = raw;
            rec.value = std::max(raw, 0.0);
            if (m == Measure::JSD_weighted) {
                rec.weights = weights;
            }
            records.push_back(rec);
        }
    }
    return records;
}

std::vector<DistanceRecord> sweep_distances(const FamilySpec& family, double alpha,
                                            const LadderSpec& ladder, const WeightPair& weights,
                                            const Grid& grid) {
    std::vector<double> offsets = ladder.offsets();
    if (ladder.include_negatives) {
        const std::size_t positives = offsets.size();
        offsets.reserve(2 * positives);
        for (std::size_t k = 0; k < positives; ++k) {
            offsets.push_back(-offsets[k]);
        }
    }
    return sweep_distances(family, alpha, offsets, weights, grid);
}

CoefficientFit fit_coefficient(std::span<const DistanceRecord> records,
                               const FisherValue& fisher) {
    if (records.empty()) {
        throw insufficient_data_error("fit_coefficient: no records");
    }
    const Measure measure = records.front().measure;
    std::vector<const DistanceRecord*> rungs;
    for (const DistanceRecord& r : records) {
        if (r.measure != measure) {
            throw std::invalid_argument("fit_coefficient: records mix measures");
        }
        if (r.delta_alpha > 0.0) {
            rungs.push_back(&r);
        }
    }
    if (rungs.size() < 4) {
        throw insufficient_data_error("fit_coefficient: need at least four ladder points");
    }
    if (!(fisher.value > 0.0)) {
        throw std::invalid_argument("fit_coefficient: Fisher information must be positive");
    }

    // Convergence order: least-squares slope of log(value) vs log(delta),
    // over the rungs carrying actual signal.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const DistanceRecord* r : rungs) {
        if (r->value <= kNoiseFloor) {
            continue;
        }
        const double x = std::log(r->delta_alpha);
        const double y = std::log(r->value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) {
        throw degenerate_fit_error("fit_coefficient: no rung rises above the noise floor");
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    // Read c_hat at the smallest reliable rung, where higher-order terms are
    // weakest but the value still clears the noise floor.
    const DistanceRecord* best = nullptr;
    for (const DistanceRecord* r : rungs) {
        if (r->value > kNoiseFloor && (best == nullptr || r->delta_alpha < best->delta_alpha)) {
            best = r;
        }
    }
    const WeightPair weights = best->weights.value_or(WeightPair{0.5, 0.5});

    CoefficientFit fit;
    fit.measure = measure;
    fit.c_hat = best->value / (best->delta_alpha * best->delta_alpha * fisher.value);
    fit.predicted_c = predicted_coefficient(measure, weights);
    fit.convergence_order = slope;
    fit.residual = std::abs(fit.c_hat - fit.predicted_c) / fit.predicted_c;
    return fit;
}

std::vector<AsymmetryPoint> first_order_asymmetry(std::span<const DistanceRecord> records,
                                                  Measure measure) {
    std::map<double, std::pair<const DistanceRecord*, const DistanceRecord*>> pairs;
    for (const DistanceRecord& r : records) {
        if (r.measure != measure || r.delta_alpha == 0.0) {
            continue;
        }
        auto& slot = pairs[std::abs(r.delta_alpha)];
        (r.delta_alpha > 0.0 ? slot.first : slot.second) = &r;
    }
    if (pairs.empty()) {
        throw std::invalid_argument("first_order_asymmetry: no records for measure");
    }
    std::vector<AsymmetryPoint> profile;
    profile.reserve(pairs.size());
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        const auto& [plus, minus] = it->second;
        if (plus == nullptr || minus == nullptr) {
            throw std::invalid_argument("first_order_asymmetry: unmatched +-delta pair");
        }
        const double hi = std::max(plus->value, minus->value);
        if (!(hi > 0.0)) {
            throw std::invalid_argument("first_order_asymmetry: vanishing pair");
        }
        profile.push_back({it->first, std::abs(plus->value - minus->value) / hi});
    }
    return profile;
}

double first_order_stability(std::span<const DistanceRecord> records, Measure measure) {
    double worst = 0.0;
    for (const AsymmetryPoint& p : first_order_asymmetry(records, measure)) {
        worst = std::max(worst, p.ratio);
    }
    return worst;
}

std::vector<CoefficientFit> coefficient_report(const FamilySpec& family, double alpha,
                                               const LadderSpec& ladder,
                                               const WeightPair& weights, const Grid& grid,
                                               double fd_step) {
    const std::vector<DistanceRecord> records =
        sweep_distances(family, alpha, ladder, weights, grid);
    const std::optional<FisherValue> analytic = analytic_fisher(family, alpha);
    const FisherValue fisher =
        analytic ? *analytic : fisher_information(family, alpha, grid, fd_step);

    std::vector<CoefficientFit> fits;
    fits.reserve(kAllMeasures.size());
    for (Measure m : kAllMeasures) {
        std::vector<DistanceRecord> subset;
        for (const DistanceRecord& r : records) {
            if (r.measure == m) {
                subset.push_back(r);
            }
        }
        fits.push_back(fit_coefficient(subset, fisher));
    }
    return fits;
}

}  // namespace infodist
