// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace noptica {

/// Gauss-Legendre rule on [-1, 1]: \c n nodes in ascending order with
/// weights summing to 2.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Compute the n-point Gauss-Legendre rule by Newton iteration on the
/// Legendre recurrence. n >= 1.
GaussLegendreRule gauss_legendre(int n);

/// Adaptive Gauss-Kronrod integration of f over [a, b] to the requested
/// relative tolerance. Throws numeric_error when the error estimate does
/// not meet the tolerance.
double integrate(const std::function<double(double)>& f,
                 double a,
                 double b,
                 double rel_tol = 1e-11);

/// (sin x - x cos x) / x^3, series-protected near x = 0 where the direct
/// form loses all significant digits. Equals 1/3 at x = 0.
double sin_minus_xcos_over_x3(double x);

/// sin(x)/x - 1, series-protected near x = 0. Equals 0 at x = 0.
double sinc_minus_one(double x);

}  // namespace noptica
