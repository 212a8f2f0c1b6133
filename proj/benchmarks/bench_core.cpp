// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "bispinor/bispinor.hpp"

using namespace bispinor;

namespace {

ComplexMatrix random_density(std::size_t qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (auto& a : amps) a = {g(rng), g(rng)};
    return normalize(StateVector(std::move(amps))).density();
}

void BM_JacobiEigenvalues(benchmark::State& state) {
    const ComplexMatrix rho = random_density(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
    state.SetLabel(std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(2)->Arg(4)->Arg(6);

void BM_MeanNegativities(benchmark::State& state) {
    const auto [p, q] = com_framework(0.5);
    const StateVector psi = build_bell_state(p, q, 0.6).psi;
    for (auto _ : state) benchmark::DoNotOptimize(mean_negativities(psi));
}
BENCHMARK(BM_MeanNegativities);

void BM_NegativitySweep(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(negativity_sweep(0.785, 1.0, {0.0, 4.0, 0.01}, BoostFramework::Perpendicular));
}
BENCHMARK(BM_NegativitySweep)->Unit(benchmark::kMillisecond);

void BM_SixQubitProjection(benchmark::State& state) {
    const SixQubitState s0 = build_superposed(1.0, 0.785, 0.785);
    const BoostParams b = BoostParams::make(1.0, {1.0, 0.0, 0.0});
    for (auto _ : state) {
        const SixQubitState s = boost_superposed(s0, b);
        benchmark::DoNotOptimize(spin_momentum_negativities(project_positive_parity(s)));
        benchmark::DoNotOptimize(spin_momentum_negativities(trace_out_parity(s)));
    }
}
BENCHMARK(BM_SixQubitProjection);

}  // namespace

BENCHMARK_MAIN();
