// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "noptica/beam.hpp"
#include "noptica/medium.hpp"
#include "noptica/structure.hpp"

namespace noptica {

/// Discrete basis of momentum directions on the elastic shell |p| = p0:
/// Gauss-Legendre nodes in cos(theta) crossed with a uniform azimuth grid.
/// Quadrature weights are in steradians and sum to 4 pi.
class DirectionGrid {
  public:
    DirectionGrid(std::vector<Eigen::Vector3d> directions, std::vector<double> weights);

    int size() const { return static_cast<int>(directions_.size()); }
    const Eigen::Vector3d& direction(int i) const { return directions_[i]; }
    double weight(int i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    /// Quadrature of f(cos theta) over the sphere, Sum_i w_i f(cos theta_i).
    double integrate_polar(const std::function<double(double)>& f) const;

  private:
    std::vector<Eigen::Vector3d> directions_;
    std::vector<double> weights_;
};

/// n_polar >= 2 Gauss-Legendre nodes in cos(theta), n_azimuth >= 1 uniform
/// azimuths. Directions are ordered polar-major with ascending cos(theta),
/// index = k * n_azimuth + l.
DirectionGrid build_direction_grid(int n_polar, int n_azimuth);

/// Hermitian, unit-trace state over a DirectionGrid basis. Construction
/// validates hermiticity (1e-12), trace (1e-12) and spectrum
/// (eigenvalues >= -1e-9).
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd rho);

    /// Pure state concentrated in basis element j.
    static DensityMatrix basis_state(int dim, int j);

    /// Maximally mixed state I/N.
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }

  private:
    Eigen::MatrixXcd rho_;
};

/// Rate-weighted momentum-transfer jump operators L_ij = sqrt(hbar R_ij) |i><j|
/// realizing the incoherent part of the master equation. The diagonal loss
/// operator Gamma = (1/2) Sum L^dag L has entries gamma_j = (hbar/2) Sum_i R_ij,
/// which is what balances gain against loss and conserves the trace.
class JumpOperatorSet {
  public:
    /// rates(i, j) = R_{i<-j} [1/s], all >= 0.
    JumpOperatorSet(Eigen::MatrixXd rates, double kinetic_energy);

    int dim() const { return static_cast<int>(rates_.rows()); }
    const Eigen::MatrixXd& rates() const { return rates_; }

    /// gamma_j = (hbar/2) Sum_i R_ij [J].
    const Eigen::VectorXd& gamma() const { return gamma_; }

    /// Total transition rate out of state j, Sum_i R_ij = 2 gamma_j / hbar [1/s].
    double out_rate(int j) const;

    /// Kinetic energy on the elastic shell [J]; uniform, so it never moves
    /// populations, but it is kept for the commutator evaluation.
    double kinetic_energy() const { return kinetic_energy_; }

  private:
    Eigen::MatrixXd rates_;
    Eigen::VectorXd gamma_;
    double kinetic_energy_;
};

/// R_{i<-j} = n_o (p0/m) b^2 S_c(q_ij) w_i with q_ij = (p0/hbar) |n_i - n_j|.
/// Forward coherent scattering lives in the Hamiltonian sector: the rates
/// carry only the correlated part S_c, so the i = j entry is the genuinely
/// diffuse scattering that lands back in the forward bin, weighted by
/// S_c(0). The out-rate from any j is then the full quadrature of the
/// solid-angle integral and converges to attenuation_rate as the grid
/// refines. Throws when the model produces a negative S_c sample.
JumpOperatorSet build_jump_operators(const DirectionGrid& grid,
                                     const Medium& medium,
                                     const Beam& beam,
                                     const StructureModel& model);

/// Per-step conservation diagnostics.
struct StepDiagnostics {
    double trace_deviation;       // |Tr rho - 1|
    double hermiticity_residual;  // max |rho - rho^dag|
    double min_eigenvalue;
    double ot_residual_relative;  // optical-theorem residual / generator scale
};

/// Stored evolution history: strictly increasing timestamps, the state at
/// each stored step and its diagnostics.
struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::MatrixXcd> states;
    std::vector<StepDiagnostics> diagnostics;

    /// Population rho_jj at every stored time.
    std::vector<double> population(int j) const;
};

/// Apply the master-equation generator once:
///   d rho = -(i/hbar) [H, rho] - (1/hbar) {Gamma, rho} + (1/hbar) Sum L rho L^dag
/// with H = (E_kin + u_real) I diagonal. Exposed for oracle tests.
Eigen::MatrixXcd apply_generator(const Eigen::MatrixXcd& rho,
                                 const JumpOperatorSet& jumps,
                                 double u_real);

/// Fixed-step classic Runge-Kutta integration of the generator. The trace is
/// never renormalized; any drift is part of the diagnostics. Requires
/// dt * max_j(2 gamma_j / hbar) < 0.1 (step-size guard) and throws
/// numeric_error on NaN.
Trajectory evolve(const DensityMatrix& rho0,
                  const JumpOperatorSet& jumps,
                  double u_real,
                  double dt,
                  int steps,
                  int store_every = 1);

/// | Tr((1/hbar) Sum L rho L^dag) - Tr((1/hbar) {Gamma, rho}) | [1/s].
/// Zero up to round-off because Gamma = (1/2) Sum L^dag L by construction.
double optical_theorem_residual(const DensityMatrix& rho, const JumpOperatorSet& jumps);

/// Exponential-decay fit of a stored population.
struct SurvivalFit {
    double rate;       // [1/s]
    double r_squared;  // fit quality over the window used
    bool monotone;     // population non-increasing over the window
};

/// Least-squares fit of log rho_{j0 j0}(t) over the initial decade of decay
/// (down to a factor 10 below the initial population, or the whole
/// trajectory if it never falls that far). Requires the trajectory to span
/// at least three decay constants of decline or 100 stored steps.
SurvivalFit coherent_survival(const Trajectory& traj, int j0);

}  // namespace noptica
