// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/wigner.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"
#include "noptica/threads.hpp"

namespace noptica {

namespace {
constexpr double pi = std::numbers::pi;
using complexd = std::complex<double>;
}  // namespace

MomentumState1D::MomentumState1D(Eigen::MatrixXcd rho, double p_min, double dp)
    : rho_(std::move(rho)), p_min_(p_min), dp_(dp) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw domain_error("MomentumState1D: matrix must be square and non-empty");
    }
    if (!(dp_ > 0.0) || !std::isfinite(dp_) || !std::isfinite(p_min_)) {
        throw domain_error("MomentumState1D: need a finite grid with dp > 0");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw domain_error("MomentumState1D: not Hermitian within 1e-12");
    }
    if (std::abs(rho_.trace() - complexd(1.0, 0.0)) > 1e-12) {
        throw domain_error("MomentumState1D: trace differs from 1 by more than 1e-12");
    }
}

WignerField::WignerField(Eigen::MatrixXd values,
                         std::vector<double> x,
                         std::vector<double> p,
                         double dx,
                         double dp_out,
                         double input_dp)
    : values_(std::move(values)),
      x_(std::move(x)),
      p_(std::move(p)),
      dx_(dx),
      dp_out_(dp_out),
      input_dp_(input_dp) {}

double WignerField::integral() const {
    return values_.sum() * dx_ * dp_out_;
}

std::vector<double> WignerField::momentum_marginal() const {
    const int n_input = (static_cast<int>(p_.size()) + 1) / 2;
    std::vector<double> marginal(n_input);
    for (int j = 0; j < n_input; ++j) {
        marginal[j] = values_.row(2 * j).sum() * dx_ * dp_out_;
    }
    return marginal;
}

std::vector<double> WignerField::position_marginal() const {
    std::vector<double> marginal(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
        marginal[i] = values_.col(static_cast<int>(i)).sum() * dp_out_;
    }
    return marginal;
}

std::vector<double> conjugate_x_grid(double dp, int n, double x_min) {
    if (!(dp > 0.0) || n < 1) {
        throw domain_error("conjugate_x_grid: need dp > 0 and n >= 1");
    }
    const double span = 2.0 * pi * constants::hbar / dp;
    const double dx = span / n;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = x_min + i * dx;
    }
    return x;
}

WignerField wigner_transform(const MomentumState1D& state, const std::vector<double>& x_grid) {
    using constants::hbar;
    const int n = state.dim();
    const int nx = static_cast<int>(x_grid.size());
    if (nx < 2) {
        throw domain_error("wigner_transform: need at least two x samples");
    }
    const double dx = x_grid[1] - x_grid[0];
    if (!(dx > 0.0)) {
        throw domain_error("wigner_transform: x grid must be increasing");
    }
    for (int i = 1; i < nx; ++i) {
        if (std::abs((x_grid[i] - x_grid[i - 1]) - dx) > 1e-9 * dx) {
            throw domain_error("wigner_transform: x grid must be uniform");
        }
    }
    const double dp = state.dp();
    const double span_limit = 2.0 * pi * hbar / dp;
    if (nx * dx > span_limit * (1.0 + 1e-9)) {
        throw domain_error("wigner_transform: x span " + std::to_string(nx * dx)
                           + " m exceeds the alias-free window 2 pi hbar / dp = "
                           + std::to_string(span_limit) + " m");
    }

    const Eigen::MatrixXcd& rho = state.matrix();
    const int n_slices = 2 * n - 1;
    Eigen::MatrixXd values(n_slices, nx);
    std::vector<double> p(n_slices);
    for (int s = 0; s < n_slices; ++s) {
        p[s] = state.p_min() + 0.5 * s * dp;
    }

    // One anti-diagonal per output momentum slice. Pairing the +q and -q
    // elements keeps the result exactly real for Hermitian input.
    parallel_for(nx, [&](int i) {
        const double x = x_grid[i];
        for (int s = 0; s < n_slices; ++s) {
            double sum = (s % 2 == 0) ? rho(s / 2, s / 2).real() : 0.0;
            const int d_max = std::min(s, n_slices - 1 - s);
            for (int d = (s % 2 == 0) ? 2 : 1; d <= d_max; d += 2) {
                const int m = (s + d) / 2;
                const int l = (s - d) / 2;
                const complexd phase(std::polar(1.0, x * d * dp / hbar));
                sum += 2.0 * (rho(m, l) * phase).real();
            }
            values(s, i) = sum / (pi * hbar);
        }
    });

    return WignerField(std::move(values), x_grid, std::move(p), dx, dp / 2.0, dp);
}

}  // namespace noptica
