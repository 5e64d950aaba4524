// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "noptica/constants.hpp"
#include "noptica/wigner.hpp"

namespace {

void WignerTransform(benchmark::State& state) {
    using noptica::constants::hbar;
    const int n = static_cast<int>(state.range(0));
    const double sigma = 5e-9;
    const double dp = hbar / (4.0 * sigma);
    const double p_center = 3.68e-24;
    const double p_min = p_center - 0.5 * (n - 1) * dp;

    Eigen::VectorXcd psi(n);
    for (int j = 0; j < n; ++j) {
        const double d = (p_min + j * dp - p_center) / (2.0 * dp);
        psi(j) = std::exp(-d * d);
    }
    psi /= std::sqrt(psi.squaredNorm());
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    rho /= rho.trace().real();
    const noptica::MomentumState1D stateM(rho, p_min, dp);
    const auto x = noptica::conjugate_x_grid(dp, 2 * n,
                                             -std::numbers::pi * hbar / dp);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noptica::wigner_transform(stateM, x));
    }
    state.SetComplexityN(n);
}
BENCHMARK(WignerTransform)->RangeMultiplier(2)->Range(16, 128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
