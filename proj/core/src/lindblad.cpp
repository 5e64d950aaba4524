// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"
#include "noptica/numerics.hpp"

namespace noptica {

namespace {

constexpr double pi = std::numbers::pi;
using complexd = std::complex<double>;

double hermiticity_residual(const Eigen::MatrixXcd& rho) {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

// Traces of the gain term (1/hbar) Sum L rho L^dag and the loss term
// (1/hbar) {Gamma, rho}; both depend only on the populations.
std::pair<double, double> gain_loss_traces(const Eigen::MatrixXcd& rho,
                                           const JumpOperatorSet& jumps) {
    const Eigen::VectorXd populations = rho.diagonal().real();
    const double gain = (jumps.rates() * populations).sum();
    const double loss = 2.0 / constants::hbar * jumps.gamma().dot(populations);
    return {gain, loss};
}

}  // namespace

DirectionGrid::DirectionGrid(std::vector<Eigen::Vector3d> directions,
                             std::vector<double> weights)
    : directions_(std::move(directions)), weights_(std::move(weights)) {
    if (directions_.size() != weights_.size() || directions_.empty()) {
        throw domain_error("DirectionGrid: directions and weights must match and be non-empty");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < directions_.size(); ++i) {
        if (std::abs(directions_[i].norm() - 1.0) > 1e-12) {
            throw domain_error("DirectionGrid: directions must be unit vectors");
        }
        if (!(weights_[i] > 0.0)) {
            throw domain_error("DirectionGrid: weights must be positive");
        }
        sum += weights_[i];
    }
    if (std::abs(sum - 4.0 * pi) > 1e-12 * 4.0 * pi) {
        throw domain_error("DirectionGrid: weights sum to " + std::to_string(sum)
                           + ", expected 4 pi");
    }
}

double DirectionGrid::integrate_polar(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < directions_.size(); ++i) {
        sum += weights_[i] * f(directions_[i].z());
    }
    return sum;
}

DirectionGrid build_direction_grid(int n_polar, int n_azimuth) {
    if (n_polar < 2 || n_azimuth < 1) {
        throw domain_error("build_direction_grid: need n_polar >= 2 and n_azimuth >= 1");
    }
    const GaussLegendreRule rule = gauss_legendre(n_polar);
    std::vector<Eigen::Vector3d> directions;
    std::vector<double> weights;
    directions.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
    weights.reserve(directions.capacity());
    const double azimuth_weight = 2.0 * pi / n_azimuth;
    for (int k = 0; k < n_polar; ++k) {
        const double cos_theta = rule.nodes[k];
        const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
        for (int l = 0; l < n_azimuth; ++l) {
            const double az = 2.0 * pi * l / n_azimuth;
            directions.emplace_back(sin_theta * std::cos(az), sin_theta * std::sin(az),
                                    cos_theta);
            weights.push_back(rule.weights[k] * azimuth_weight);
        }
    }
    return DirectionGrid(std::move(directions), std::move(weights));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw domain_error("DensityMatrix: matrix must be square and non-empty");
    }
    if (hermiticity_residual(rho_) > 1e-12) {
        throw domain_error("DensityMatrix: not Hermitian within 1e-12");
    }
    if (std::abs(rho_.trace() - complexd(1.0, 0.0)) > 1e-12) {
        throw domain_error("DensityMatrix: trace differs from 1 by more than 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_,
                                                           Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-9) {
        throw domain_error("DensityMatrix: negative eigenvalue "
                           + std::to_string(solver.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::basis_state(int dim, int j) {
    if (j < 0 || j >= dim) {
        throw domain_error("DensityMatrix::basis_state: index out of range");
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    rho(j, j) = 1.0;
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    Eigen::MatrixXcd rho =
        Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(rho));
}

JumpOperatorSet::JumpOperatorSet(Eigen::MatrixXd rates, double kinetic_energy)
    : rates_(std::move(rates)), kinetic_energy_(kinetic_energy) {
    if (rates_.rows() != rates_.cols() || rates_.rows() == 0) {
        throw domain_error("JumpOperatorSet: rate matrix must be square");
    }
    if ((rates_.array() < 0.0).any()) {
        throw domain_error("JumpOperatorSet: rates must be >= 0");
    }
    gamma_ = constants::hbar / 2.0 * rates_.colwise().sum().transpose();
}

double JumpOperatorSet::out_rate(int j) const {
    return 2.0 * gamma_(j) / constants::hbar;
}

JumpOperatorSet build_jump_operators(const DirectionGrid& grid,
                                     const Medium& medium,
                                     const Beam& beam,
                                     const StructureModel& model) {
    const int n = grid.size();
    const double p0 = beam.momentum();
    const double b = medium.scattering_length();
    const double prefactor =
        medium.number_density() * (p0 / constants::neutron_mass) * b * b;
    Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double q =
                (p0 / constants::hbar) * (grid.direction(i) - grid.direction(j)).norm();
            const double s = model(q);
            if (s < 0.0) {
                throw numeric_error("build_jump_operators: S_c(q) = " + std::to_string(s)
                                    + " < 0 at q = " + std::to_string(q));
            }
            rates(i, j) = prefactor * s * grid.weight(i);
        }
    }
    return JumpOperatorSet(std::move(rates), beam.energy());
}

Eigen::MatrixXcd apply_generator(const Eigen::MatrixXcd& rho,
                                 const JumpOperatorSet& jumps,
                                 double u_real) {
    using constants::hbar;
    const int n = static_cast<int>(rho.rows());
    const Eigen::VectorXd& gamma = jumps.gamma();

    // The Hamiltonian is (E_kin + u_real) I on the elastic shell; the
    // commutator is evaluated from the level vector anyway so that a
    // non-uniform diagonal would be handled identically.
    Eigen::VectorXd levels =
        Eigen::VectorXd::Constant(n, jumps.kinetic_energy() + u_real);

    Eigen::MatrixXcd out(n, n);
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) {
            const complexd commutator =
                complexd(0.0, -1.0 / hbar) * (levels(row) - levels(col)) * rho(row, col);
            const complexd loss = -(gamma(row) + gamma(col)) / hbar * rho(row, col);
            out(row, col) = commutator + loss;
        }
    }
    // Gain term Sum_ij R_ij |i><j| rho |j><i|: purely diagonal, feeds on
    // the populations alone.
    const Eigen::VectorXd gain_re = jumps.rates() * rho.diagonal().real().matrix();
    const Eigen::VectorXd gain_im = jumps.rates() * rho.diagonal().imag().matrix();
    for (int j = 0; j < n; ++j) {
        out(j, j) += complexd(gain_re(j), gain_im(j));
    }
    return out;
}

Trajectory evolve(const DensityMatrix& rho0,
                  const JumpOperatorSet& jumps,
                  double u_real,
                  double dt,
                  int steps,
                  int store_every) {
    if (rho0.dim() != jumps.dim()) {
        throw domain_error("evolve: state and jump-operator dimensions differ");
    }
    if (!(dt > 0.0) || steps < 1 || store_every < 1) {
        throw domain_error("evolve: need dt > 0, steps >= 1, store_every >= 1");
    }
    const double max_rate =
        jumps.gamma().size() > 0 ? 2.0 * jumps.gamma().maxCoeff() / constants::hbar : 0.0;
    if (dt * max_rate >= 0.1) {
        throw numeric_error("evolve: dt * max(2 gamma/hbar) = "
                            + std::to_string(dt * max_rate)
                            + " violates the < 0.1 stability guard");
    }

    const auto diagnose = [&](const Eigen::MatrixXcd& rho) {
        StepDiagnostics diag;
        diag.trace_deviation = std::abs(rho.trace() - complexd(1.0, 0.0));
        diag.hermiticity_residual = hermiticity_residual(rho);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
        diag.min_eigenvalue = solver.eigenvalues().minCoeff();
        const auto [gain, loss] = gain_loss_traces(rho, jumps);
        const double scale = std::max(std::abs(gain), std::abs(loss));
        diag.ot_residual_relative = scale > 0.0 ? std::abs(gain - loss) / scale : 0.0;
        return diag;
    };

    Trajectory traj;
    traj.times.reserve(steps / store_every + 2);
    Eigen::MatrixXcd rho = rho0.matrix();
    traj.times.push_back(0.0);
    traj.states.push_back(rho);
    traj.diagnostics.push_back(diagnose(rho));

    Eigen::MatrixXcd k1;
    Eigen::MatrixXcd k2;
    Eigen::MatrixXcd k3;
    Eigen::MatrixXcd k4;
    for (int step = 1; step <= steps; ++step) {
        k1 = apply_generator(rho, jumps, u_real);
        k2 = apply_generator(rho + (dt / 2.0) * k1, jumps, u_real);
        k3 = apply_generator(rho + (dt / 2.0) * k2, jumps, u_real);
        k4 = apply_generator(rho + dt * k3, jumps, u_real);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!rho.allFinite()) {
            throw numeric_error("evolve: non-finite state at step " + std::to_string(step));
        }
        if (step % store_every == 0 || step == steps) {
            traj.times.push_back(step * dt);
            traj.states.push_back(rho);
            traj.diagnostics.push_back(diagnose(rho));
        }
    }
    return traj;
}

std::vector<double> Trajectory::population(int j) const {
    std::vector<double> p;
    p.reserve(states.size());
    for (const auto& rho : states) {
        p.push_back(rho(j, j).real());
    }
    return p;
}

double optical_theorem_residual(const DensityMatrix& rho, const JumpOperatorSet& jumps) {
    if (rho.dim() != jumps.dim()) {
        throw domain_error("optical_theorem_residual: dimension mismatch");
    }
    const auto [gain, loss] = gain_loss_traces(rho.matrix(), jumps);
    return std::abs(gain - loss);
}

SurvivalFit coherent_survival(const Trajectory& traj, int j0) {
    const std::size_t n = traj.times.size();
    if (n < 2 || traj.states.empty()) {
        throw domain_error("coherent_survival: trajectory too short");
    }
    if (j0 < 0 || j0 >= traj.states.front().rows()) {
        throw domain_error("coherent_survival: j0 out of range");
    }
    const std::vector<double> population = traj.population(j0);
    const double p_initial = population.front();
    if (!(p_initial > 0.0)) {
        throw domain_error("coherent_survival: initial population must be positive");
    }

    // Fit window: from t = 0 down to the first sample a decade below the
    // initial population (whole trajectory if it never falls that far).
    std::size_t window = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (population[i] <= p_initial / 10.0) {
            window = i + 1;
            break;
        }
    }
    const double p_final = population[window - 1];
    const double decline = p_final > 0.0 ? std::log(p_initial / p_final) : 1e300;
    if (decline < 3.0 && n < 100) {
        throw domain_error("coherent_survival: trajectory spans neither three decay "
                           "constants of decline nor 100 stored steps");
    }

    bool monotone = true;
    double sum_t = 0.0;
    double sum_y = 0.0;
    double sum_tt = 0.0;
    double sum_ty = 0.0;
    double sum_yy = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
        if (!(population[i] > 0.0)) {
            throw numeric_error("coherent_survival: population must stay positive "
                                "over the fit window");
        }
        if (i > 0 && population[i] > population[i - 1] * (1.0 + 1e-12)) {
            monotone = false;
        }
        const double t = traj.times[i];
        const double y = std::log(population[i]);
        sum_t += t;
        sum_y += y;
        sum_tt += t * t;
        sum_ty += t * y;
        sum_yy += y * y;
    }
    const double m = static_cast<double>(window);
    const double denom = m * sum_tt - sum_t * sum_t;
    if (denom == 0.0) {
        throw domain_error("coherent_survival: degenerate time grid");
    }
    const double slope = (m * sum_ty - sum_t * sum_y) / denom;
    const double ss_tot = sum_yy - sum_y * sum_y / m;
    const double ss_res = ss_tot - slope * (sum_ty - sum_t * sum_y / m);

    SurvivalFit fit;
    fit.rate = -slope;
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    fit.monotone = monotone;
    return fit;
}

}  // namespace noptica
