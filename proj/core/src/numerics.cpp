// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "noptica/errors.hpp"

namespace noptica {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw domain_error("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // P_n and P_n' from the three-term recurrence.
    const auto legendre = [n](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        return std::pair<double, double>{p1, dp};
    };

    // Roots come in +/- pairs; solve the upper half by Newton iteration
    // from the Chebyshev estimate and mirror.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        if (n == 1) x = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        const double dp = legendre(x).second;
        const double w = (n == 1) ? 2.0 : 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
        if (n > 1) {
            const double dp = legendre(0.0).second;
            rule.weights[n / 2] = 2.0 / (dp * dp);
        }
    }
    return rule;
}

double integrate(const std::function<double(double)>& f,
                 double a,
                 double b,
                 double rel_tol) {
    if (a == b) return 0.0;
    double error = 0.0;
    double l1 = 0.0;
    // The panel error estimator (200 |K - G|)^{3/2} has a round-off floor
    // well above eps, so subdivision targets below ~1e-9 only pile up
    // floor noise without improving the (already machine-level) result.
    const double target = std::max(rel_tol, 1e-9);
    const double result = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, 12, target, &error, &l1);
    if (!std::isfinite(result)) {
        throw numeric_error("integrate: non-finite result on ["
                            + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    const double scale = std::max(l1, std::abs(result));
    if (scale > 0.0 && error > 1e-5 * scale) {
        throw numeric_error("integrate: quadrature did not converge on ["
                            + std::to_string(a) + ", " + std::to_string(b)
                            + "]; relative error estimate " + std::to_string(error / scale));
    }
    return result;
}

double sin_minus_xcos_over_x3(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-2) {
        const double x2 = x * x;
        return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 - x2 * x2 * x2 / 45360.0;
    }
    return (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

double sinc_minus_one(double x) {
    const double ax = std::abs(x);
    if (ax < 0.1) {
        const double x2 = x * x;
        return x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0 + x2 / 362880.0)));
    }
    return std::sin(x) / x - 1.0;
}

}  // namespace noptica
