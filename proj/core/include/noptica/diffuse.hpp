// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "noptica/beam.hpp"
#include "noptica/medium.hpp"
#include "noptica/structure.hpp"

namespace noptica {

/// Elastic momentum transfer (divided by hbar) for scattering by polar
/// angle theta off a beam of momentum p0: q = 2 (p0/hbar) sin(theta/2).
double momentum_transfer(const Beam& beam, double theta);

/// Solid-angle integral of the structure factor over polar angles up to
/// phi_max: 2 pi Int_0^phi sin(theta) S_c(q(theta)) dtheta [sr].
double structure_solid_angle_integral(const Beam& beam,
                                      const StructureModel& model,
                                      double phi_max);

/// Total diffusion cross section per particle,
/// sigma_d = b^2 Int dOmega_q S_c(q) [m^2], by adaptive quadrature.
double diffusion_cross_section(const Medium& medium,
                               const Beam& beam,
                               const StructureModel& model);

/// Attenuation rate of the coherent beam, n_o (p0/m) sigma_d [1/s].
double attenuation_rate(const Medium& medium,
                        const Beam& beam,
                        const StructureModel& model);

/// Integrated diffuse-scattering probability into polar angles <= phi for
/// a beam traversing the sample, hard-sphere closed form:
///   A(phi) = 2 pi n_o b^2 D { (1 - cos phi)
///            + 3 [1 - S_c(0)] (hbar / a p0)^2 [ sin(x)/x - 1 ] },
/// x = (a p0 / hbar) sqrt(2 (1 - cos phi)). At a = 0 this degenerates to
/// 2 pi n_o b^2 D (1 - cos phi).
double acceptance_closed_form(const Medium& medium, const Beam& beam, double phi);

/// Same acceptance integral, evaluated by adaptive quadrature of
/// 2 pi n_o b^2 D Int_0^phi sin(theta) S_c(q(theta)) dtheta. Works for any
/// structure model and serves as the oracle for the closed form.
double acceptance_quadrature(const Medium& medium,
                             const Beam& beam,
                             const StructureModel& model,
                             double phi);

/// Small-angle expansion of the hard-sphere acceptance integral,
///   A(phi) ~ pi n_o b^2 D { phi^2 S_c(0)
///            + phi^4 [ (1/20)(1 - S_c(0)) (a p0/hbar)^2 - (1/12) S_c(0) ] }.
/// With leading_only, just pi n_o b^2 D S_c(0) phi^2. The caller owns the
/// phi << 1 validity range.
double acceptance_small_angle(const Medium& medium,
                              const Beam& beam,
                              double phi,
                              bool leading_only = false);

/// Sampled acceptance curve A(phi) with provenance identifiers.
struct AcceptanceCurve {
    std::vector<double> phi;  // strictly increasing in [0, pi]
    std::vector<double> a;    // A(phi_i), A(0) = 0, non-decreasing for S_c >= 0
    std::string medium_id;
    std::string beam_id;
    std::string model_id;
};

/// Sample acceptance_quadrature on the given angles and validate the
/// curve invariants.
AcceptanceCurve sample_acceptance_curve(const Medium& medium,
                                        const Beam& beam,
                                        const StructureModel& model,
                                        const std::vector<double>& phi);

}  // namespace noptica
