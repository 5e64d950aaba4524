// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "noptica/structure.hpp"

namespace {

constexpr double pi = std::numbers::pi;

void HardSphereEval(benchmark::State& state) {
    const double a = 3e-10;
    const double n_o = 0.01 * 3.0 / (4.0 * pi * a * a * a);
    const auto model = noptica::StructureModel::hard_sphere(a, n_o);
    double q = 0.0;
    for (auto _ : state) {
        q += 1e8;
        if (q > 50.0 / a) q = 0.0;
        benchmark::DoNotOptimize(model(q));
    }
}
BENCHMARK(HardSphereEval);

void PairCorrelationEval(benchmark::State& state) {
    const double a = 3e-10;
    const double n_o = 0.01 * 3.0 / (4.0 * pi * a * a * a);
    const auto samples = static_cast<int>(state.range(0));
    std::vector<double> r;
    std::vector<double> g;
    for (int i = 0; i <= samples; ++i) {
        const double ri = 1.5 * a * i / samples;
        r.push_back(ri);
        g.push_back(ri < a ? 0.0 : 1.0);
    }
    const auto model = noptica::StructureModel::pair_correlation(r, g, n_o);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model(10.0 / a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PairCorrelationEval)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void TabulatedEval(benchmark::State& state) {
    const double a = 3e-10;
    const double n_o = 0.01 * 3.0 / (4.0 * pi * a * a * a);
    const auto reference = noptica::StructureModel::hard_sphere(a, n_o);
    std::vector<double> q;
    std::vector<double> s;
    for (int i = 0; i <= 2000; ++i) {
        q.push_back(50.0 / a * i / 2000);
        s.push_back(reference(q.back()));
    }
    const auto model = noptica::StructureModel::tabulated(q, s);
    double query = 0.0;
    for (auto _ : state) {
        query += 1e8;
        if (query > 49.0 / a) query = 0.0;
        benchmark::DoNotOptimize(model(query));
    }
}
BENCHMARK(TabulatedEval);

}  // namespace

BENCHMARK_MAIN();
