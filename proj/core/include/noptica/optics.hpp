// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "noptica/beam.hpp"
#include "noptica/medium.hpp"
#include "noptica/structure.hpp"

namespace noptica {

/// Complex optical potential [J]. The real part carries the sign of the
/// scattering length; the imaginary part is never positive (attenuation,
/// not gain).
struct OpticalPotential {
    std::complex<double> value;
};

/// Interferometric phase shift chi = chi' + i chi'' accumulated over the
/// sample thickness. The transmitted amplitude factor exp(i chi' - chi'')
/// has modulus <= 1, so chi'' >= 0.
struct PhaseShift {
    double chi_prime;         // [rad]
    double chi_double_prime;  // [rad], >= 0
};

enum class IndexForm { exact, first_order };

/// Real optical potential (2 pi hbar^2 / m) b n_o of a homogeneous medium [J].
double optical_potential(const Medium& medium);

/// Goldberger-Seitz refractive index.
/// exact: sqrt(1 - (2 pi hbar^2 / (m E)) b n_o); throws
/// total_reflection_error when the radicand is negative.
/// first_order: 1 - (lambda^2 / 2 pi) b n_o.
double refractive_index_gs(const Medium& medium, const Beam& beam, IndexForm form);

/// Refractive index from the forward scattering amplitude f0 [m],
/// 1 + (lambda^2 / 2 pi) n_o c f0, first order in the density. The local
/// field correction c defaults to 1 and is exposed only as a multiplier.
/// With f0 = -b this reproduces refractive_index_gs(first_order) exactly.
double refractive_index_lax(const Medium& medium,
                            const Beam& beam,
                            double f0,
                            double local_field_correction = 1.0);

/// Phase shift over the sample: chi' = -n_o b lambda D and
/// chi'' = n_o sigma_t D / 2 with sigma_t >= 0 the total scattering cross
/// section per particle [m^2].
PhaseShift phase_shift(const Medium& medium, const Beam& beam, double sigma_t);

/// Optical potential including the diffuse-scattering imaginary part,
///   (2 pi hbar^2 / m) n_o [ b - i (b^2 / 4 pi) (p0 / hbar) Int dOmega S_c(q) ],
/// with elastic momentum transfer q(theta) = 2 (p0/hbar) sin(theta/2).
/// Satisfies 2 |Im U| / hbar = n_o (p0/m) sigma_d.
OpticalPotential complex_optical_potential(const Medium& medium,
                                           const Beam& beam,
                                           const StructureModel& model);

}  // namespace noptica
