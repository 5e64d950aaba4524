// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <numbers>

#include "noptica/constants.hpp"
#include "noptica/diffuse.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct Fixture {
    double a = 3e-10;
    double n_o = 0.01 * 3.0 / (4.0 * pi * a * a * a);
    noptica::Medium medium{n_o, 6e-15, a, 1e-2};
    noptica::Beam beam{5.0 * noptica::constants::hbar / a};
    noptica::StructureModel model = noptica::StructureModel::hard_sphere(a, n_o);
};

void AcceptanceClosedForm(benchmark::State& state) {
    Fixture f;
    double phi = 0.0;
    for (auto _ : state) {
        phi += 1e-3;
        if (phi > pi) phi = 0.0;
        benchmark::DoNotOptimize(noptica::acceptance_closed_form(f.medium, f.beam, phi));
    }
}
BENCHMARK(AcceptanceClosedForm);

void AcceptanceQuadrature(benchmark::State& state) {
    Fixture f;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            noptica::acceptance_quadrature(f.medium, f.beam, f.model, 0.3));
    }
}
BENCHMARK(AcceptanceQuadrature);

void DiffusionCrossSection(benchmark::State& state) {
    Fixture f;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            noptica::diffusion_cross_section(f.medium, f.beam, f.model));
    }
}
BENCHMARK(DiffusionCrossSection);

}  // namespace

BENCHMARK_MAIN();
