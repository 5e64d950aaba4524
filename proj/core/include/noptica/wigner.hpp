// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "noptica/errors.hpp"

namespace noptica {

/// Hermitian, unit-trace density matrix over a uniform one-dimensional
/// momentum grid p_j = p_min + j dp.
class MomentumState1D {
  public:
    MomentumState1D(Eigen::MatrixXcd rho, double p_min, double dp);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }
    double p_min() const { return p_min_; }
    double dp() const { return dp_; }
    double momentum(int j) const { return p_min_ + j * dp_; }

  private:
    Eigen::MatrixXcd rho_;
    double p_min_;
    double dp_;
};

/// Real-valued phase-space density f_w(x, p) on a rectangular grid.
///
/// The momentum axis has spacing dp/2 (2N - 1 slices): anti-diagonals of
/// the density matrix with half-integer center momenta map to their own
/// slices exactly instead of being resampled. Even slices coincide with
/// the input momentum grid.
class WignerField {
  public:
    WignerField(Eigen::MatrixXd values,
                std::vector<double> x,
                std::vector<double> p,
                double dx,
                double dp_out,
                double input_dp);

    /// value(s, i) = f_w(x_i, p_s) [1/(J s)]
    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<double>& x_grid() const { return x_; }
    const std::vector<double>& p_grid() const { return p_; }
    double dx() const { return dx_; }
    double dp() const { return dp_out_; }

    /// Sum f_w dx dp over the whole grid; 1 for a unit-trace input (exact
    /// on a Fourier-conjugate x grid).
    double integral() const;

    /// Probability in the j-th input momentum bin,
    /// Sum_i f_w(x_i, p_{2j}) dx dp: recovers rho_jj.
    std::vector<double> momentum_marginal() const;

    /// Position density Sum_s f_w(x_i, p_s) dp at every x_i [1/m].
    std::vector<double> position_marginal() const;

  private:
    Eigen::MatrixXd values_;  // (2N-1) x Nx
    std::vector<double> x_;
    std::vector<double> p_;
    double dx_;
    double dp_out_;
    double input_dp_;
};

/// Uniform x grid of n points with spacing span/n starting at x_min; with
/// span = 2 pi hbar / dp this is the Fourier-conjugate grid on which the
/// transform's marginals are exact.
std::vector<double> conjugate_x_grid(double dp, int n, double x_min);

/// Phase-space transform of a one-dimensional momentum-basis state,
///   f_w(x, p) = Int dq/(2 pi hbar) e^{i x q / hbar} <p + q/2| rho |p - q/2>,
/// discretized over the anti-diagonals of rho. The x grid must be uniform
/// and span at most 2 pi hbar / dp (aliasing guard). Hermitian pairing of
/// the +q and -q terms makes the output exactly real.
///
/// A single p slice samples q with step 2 dp, so slice values repeat (up
/// to sign) with period pi hbar / dp: states should be spatially confined
/// well inside half the x window for pointwise fidelity. Marginals and the
/// normalization are unaffected, the image terms cancel in those sums.
WignerField wigner_transform(const MomentumState1D& rho, const std::vector<double>& x_grid);

}  // namespace noptica
