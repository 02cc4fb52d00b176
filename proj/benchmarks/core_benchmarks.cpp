#include <benchmark/benchmark.h>

#include "infodist/cramer_rao.hpp"
#include "infodist/expansion.hpp"
#include "infodist/hilbert.hpp"

using namespace infodist;

namespace {

const Grid kGrid = make_grid(-12.0, 12.0, 4801);

void BM_Integrate(benchmark::State& state) {
    const DensityVector p = evaluate_density(gaussian_location(1.0), 0.0, kGrid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(p.grid, p.values));
    }
}
BENCHMARK(BM_Integrate);

void BM_EvaluateDensity(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_density(gaussian_location(1.0), 0.0, kGrid));
    }
}
BENCHMARK(BM_EvaluateDensity);

void BM_KlDivergence(benchmark::State& state) {
    const DensityVector p = evaluate_density(gaussian_location(1.0), 0.0, kGrid);
    const DensityVector q = evaluate_density(gaussian_location(1.0), 0.5, kGrid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kl_divergence(p, q));
    }
}
BENCHMARK(BM_KlDivergence);

void BM_JsdWeighted(benchmark::State& state) {
    const DensityVector p = evaluate_density(gaussian_location(1.0), 0.0, kGrid);
    const DensityVector q = evaluate_density(gaussian_location(1.0), 0.5, kGrid);
    const WeightPair w{0.5, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(jsd_weighted(p, q, w));
    }
}
BENCHMARK(BM_JsdWeighted);

void BM_Wootters(benchmark::State& state) {
    const WaveVector psi0 = evaluate_wavefunction(gaussian_location(1.0), 0.0, kGrid);
    const WaveVector psi1 = evaluate_wavefunction(gaussian_location(1.0), 0.1, kGrid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wootters(psi0, psi1));
    }
}
BENCHMARK(BM_Wootters);

void BM_FisherQuadrature(benchmark::State& state) {
    const FamilySpec mixture = two_gaussian_mixture(1.0, 1.0, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fisher_information(mixture, 0.0, kGrid));
    }
}
BENCHMARK(BM_FisherQuadrature);

void BM_SweepRung(benchmark::State& state) {
    const std::vector<double> offsets{0.01};
    const WeightPair w{0.5, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_distances(gaussian_location(1.0), 0.0,
                                                 std::span<const double>(offsets), w, kGrid));
    }
}
BENCHMARK(BM_SweepRung);

void BM_SimulateEstimation(benchmark::State& state) {
    EstimationConfig config;
    config.family = gaussian_location(1.0);
    config.samples_per_trial = static_cast<std::uint64_t>(state.range(0));
    config.trials = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_estimation(config));
    }
}
BENCHMARK(BM_SimulateEstimation)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
