// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "noptica/beam.hpp"
#include "noptica/diffuse.hpp"
#include "noptica/medium.hpp"
#include "noptica/optics.hpp"
#include "noptica/structure.hpp"

namespace noptica {

/// Flux bookkeeping for an interferometer with a sample in one path.
/// Diffuse neutrons scattered into the detector acceptance are counted in
/// the transmitted flux but carry no interference information, so the
/// fringe amplitude must be computed from the coherent flux alone.
struct VisibilityBudget {
    PhaseShift chi;
    double a_phi;                      // diffuse flux accepted, A(phi)
    double transmitted_flux_fraction;  // exp(-2 chi'') + A(phi), first order
    double coherent_flux_fraction;     // exp(-2 chi'')
    double corrected_fringe_amplitude; // coherent flux only
    bool first_order_valid;            // false when A(phi) > 0.1
};

/// Assemble the visibility budget at detector acceptance angle phi
/// (0 <= phi <= pi). sigma_t = sigma_d throughout: b is real, attenuation
/// is purely diffuse. The diffuse re-entry term is first order in A; when
/// A(phi) > 0.1 the first_order_valid flag is lowered.
VisibilityBudget visibility_budget(const Medium& medium,
                                   const Beam& beam,
                                   const StructureModel& model,
                                   double phi_acceptance);

/// Invert the leading small-angle form A(phi) ~ pi n_o b^2 D S_c(0) phi^2
/// to estimate the q = 0 structure factor from a measured acceptance.
/// Throws small_angle_validity_error when the quartic term at the inferred
/// S_c(0) exceeds 1% of the quadratic one.
double infer_s_zero(double measured_a, const Medium& medium, const Beam& beam, double phi);

}  // namespace noptica
