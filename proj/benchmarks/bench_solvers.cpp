#include "qbatt/dynamics.hpp"
#include "qbatt/ergotropy.hpp"
#include "qbatt/observables.hpp"
#include "qbatt/oracles.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qbatt;

namespace {

ModelParams point(double d, double Omega) {
    ModelParams p;
    p.R = 5.0;
    p.d = d;
    p.Omega = Omega;
    return p;
}

void BM_SolveSurvival(benchmark::State& state) {
    const ModelParams p = point(10.0, static_cast<double>(state.range(0)));
    SolverConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(solve_survival(p, cfg));
}
BENCHMARK(BM_SolveSurvival)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SolveSurvivalQuadrature(benchmark::State& state) {
    const ModelParams p = point(10.0, 1.0);
    SolverConfig cfg;
    cfg.t_max = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_survival_quadrature(p, cfg));
}
BENCHMARK(BM_SolveSurvivalQuadrature)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ObservableSeries(benchmark::State& state) {
    const Trajectory traj = solve_survival(point(10.0, 1.0), SolverConfig{});
    for (auto _ : state) benchmark::DoNotOptimize(summarize(observable_series(traj)));
}
BENCHMARK(BM_ObservableSeries)->Unit(benchmark::kMicrosecond);

void BM_Ergotropy(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const int dim = static_cast<int>(state.range(0));
    const auto rho = oracle::random_state(rng, dim);
    const auto ham = oracle::random_hamiltonian(rng, dim);
    for (auto _ : state) benchmark::DoNotOptimize(ergo::ergotropy(rho, ham));
}
BENCHMARK(BM_Ergotropy)->Arg(2)->Arg(5)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
