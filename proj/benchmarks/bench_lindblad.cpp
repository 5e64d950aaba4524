// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <numbers>

#include "noptica/constants.hpp"
#include "noptica/lindblad.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct Fixture {
    double a = 3e-10;
    double n_o = 0.01 * 3.0 / (4.0 * pi * a * a * a);
    noptica::Medium medium{n_o, 6e-15, a, 1e-2};
    noptica::Beam beam{5.0 * noptica::constants::hbar / a};
    noptica::StructureModel model = noptica::StructureModel::hard_sphere(a, n_o);
};

void BuildJumpOperators(benchmark::State& state) {
    Fixture f;
    const auto grid = noptica::build_direction_grid(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            noptica::build_jump_operators(grid, f.medium, f.beam, f.model));
    }
    state.SetComplexityN(grid.size());
}
BENCHMARK(BuildJumpOperators)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void GeneratorApply(benchmark::State& state) {
    Fixture f;
    const auto grid = noptica::build_direction_grid(static_cast<int>(state.range(0)), 4);
    const auto jumps = noptica::build_jump_operators(grid, f.medium, f.beam, f.model);
    const Eigen::MatrixXcd rho =
        noptica::DensityMatrix::maximally_mixed(grid.size()).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(noptica::apply_generator(rho, jumps, 1e-28));
    }
    state.SetComplexityN(grid.size());
}
BENCHMARK(GeneratorApply)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void EvolveSteps(benchmark::State& state) {
    Fixture f;
    const auto grid = noptica::build_direction_grid(16, 4);
    const auto jumps = noptica::build_jump_operators(grid, f.medium, f.beam, f.model);
    const auto rho0 = noptica::DensityMatrix::basis_state(grid.size(), 0);
    const double dt = 0.05 * noptica::constants::hbar / (2.0 * jumps.gamma().maxCoeff());
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            noptica::evolve(rho0, jumps, 1e-28, dt, 10, 10));
    }
}
BENCHMARK(EvolveSteps);

}  // namespace

BENCHMARK_MAIN();
