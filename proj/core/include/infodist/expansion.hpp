#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "infodist/divergences.hpp"
#include "infodist/families.hpp"
#include "infodist/grid.hpp"

namespace infodist {

// Distance values at or below this floor are considered quadrature noise
// and excluded when reading off coefficients.
inline constexpr double kNoiseFloor = 1e-12;

enum class Measure {
    K_S,           // symmetrized Kullback-Leibler
    J0,            // one-sided Jensen divergence
    J1,            // symmetric Jensen divergence
    JSD_weighted,  // weighted Jensen-Shannon divergence
    euclidean_sq,  // squared Euclidean Hilbert-space distance
    wootters,      // squared Wootters statistical distance
    fubini_study   // Fubini-Study distance
};

inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::K_S,          Measure::J0,       Measure::J1,          Measure::JSD_weighted,
    Measure::euclidean_sq, Measure::wootters, Measure::fubini_study};

std::string_view measure_name(Measure m);

/// Leading-order proportionality constant: each distance tends to
/// c * delta_alpha^2 * I(alpha) with c = 1, 1/8, 1/4, pi1*pi2/2, 1/4, 1/4,
/// 1/4 respectively.
double predicted_coefficient(Measure m, const WeightPair& weights);

/// Geometric ladder of parameter offsets, delta_max stepped down by `ratio`
/// until delta_min. Construct through make_ladder.
struct LadderSpec {
    double delta_max = 1e-1;
    double delta_min = 1e-3;
    double ratio = 1.7782794100389228;  // 10^(1/4)
    bool include_negatives = false;

    /// Positive offsets in descending order.
    std::vector<double> offsets() const;
};

/// Validates and builds a LadderSpec; the ladder must hold at least two
/// rungs (coefficient fits additionally require four, checked at fit time).
LadderSpec make_ladder(double delta_max, double delta_min, double ratio,
                       bool include_negatives = false);

/// One distance evaluation between psi(alpha) and psi(alpha + delta_alpha).
struct DistanceRecord {
    double delta_alpha = 0.0;
    Measure measure = Measure::K_S;
    double value = 0.0;      // clamped at zero
    double raw_value = 0.0;  // unclamped quadrature result
    std::optional<WeightPair> weights;  // JSD_weighted only
};

/// Estimated proportionality constant and convergence order for one measure.
struct CoefficientFit {
    Measure measure = Measure::K_S;
    double c_hat = 0.0;
    double predicted_c = 0.0;
    double convergence_order = 0.0;
    double residual = 0.0;  // |c_hat - predicted_c| / predicted_c
};

/// Distance ratio certifying the absence of a first-order term at one rung:
/// |D(+delta) - D(-delta)| / max(D(+delta), D(-delta)).
struct AsymmetryPoint {
    double delta_alpha = 0.0;
    double ratio = 0.0;
};

/// Evaluates all seven measures between psi(alpha) and psi(alpha + delta)
/// for every offset (and its negation when the ladder includes negatives).
/// Statistical measures use the densities |psi|^2, Hilbert metrics the
/// wavefunctions. Records are ordered by offset, then by measure.
std::vector<DistanceRecord> sweep_distances(const FamilySpec& family, double alpha,
                                            const LadderSpec& ladder, const WeightPair& weights,
                                            const Grid& grid);

/// Same sweep over an explicit offset list (zero offsets are admitted).
std::vector<DistanceRecord> sweep_distances(const FamilySpec& family, double alpha,
                                            std::span<const double> offsets,
                                            const WeightPair& weights, const Grid& grid);

/// Fits records of a single measure: the log-log slope of value against
/// offset gives the convergence order, and c_hat reads value/(delta^2 I) at
/// the smallest rung whose value clears kNoiseFloor. Throws
/// insufficient_data_error below four positive rungs and
/// degenerate_fit_error when no rung carries signal.
CoefficientFit fit_coefficient(std::span<const DistanceRecord> records,
                               const FisherValue& fisher);

/// Per-rung asymmetry ratios for one measure, descending in |delta|.
/// Requires matched +-delta pairs (invalid_argument otherwise).
std::vector<AsymmetryPoint> first_order_asymmetry(std::span<const DistanceRecord> records,
                                                  Measure measure);

/// Maximum asymmetry ratio over the ladder; small values certify that the
/// measure is stable against first-order offset changes.
double first_order_stability(std::span<const DistanceRecord> records, Measure measure);

/// Sweeps the ladder and fits every measure. Fisher information comes from
/// the closed form when the family has one, else from quadrature with step
/// fd_step.
std::vector<CoefficientFit> coefficient_report(const FamilySpec& family, double alpha,
                                               const LadderSpec& ladder,
                                               const WeightPair& weights, const Grid& grid,
                                               double fd_step = kDefaultFdStep);

}  // namespace infodist
