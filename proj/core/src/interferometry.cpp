// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/interferometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"

namespace noptica {

namespace {
constexpr double pi = std::numbers::pi;
}

VisibilityBudget visibility_budget(const Medium& medium,
                                   const Beam& beam,
                                   const StructureModel& model,
                                   double phi_acceptance) {
    if (!(phi_acceptance >= 0.0) || !(phi_acceptance <= pi)) {
        throw domain_error("visibility_budget: acceptance angle outside [0, pi]");
    }
    const double sigma_d = diffusion_cross_section(medium, beam, model);

    VisibilityBudget budget;
    budget.chi = phase_shift(medium, beam, sigma_d);
    budget.a_phi = acceptance_quadrature(medium, beam, model, phi_acceptance);
    budget.coherent_flux_fraction = std::exp(-2.0 * budget.chi.chi_double_prime);
    budget.transmitted_flux_fraction = budget.coherent_flux_fraction + budget.a_phi;
    budget.corrected_fringe_amplitude = budget.coherent_flux_fraction;
    budget.first_order_valid = budget.a_phi <= 0.1;
    return budget;
}

double infer_s_zero(double measured_a, const Medium& medium, const Beam& beam, double phi) {
    if (!(measured_a >= 0.0) || !std::isfinite(measured_a)) {
        throw domain_error("infer_s_zero: measured acceptance must be >= 0");
    }
    if (measured_a == 0.0) {
        return 0.0;
    }
    if (!(phi > 0.0)) {
        throw domain_error("infer_s_zero: phi must be positive");
    }
    const double b = medium.scattering_length();
    if (b == 0.0) {
        throw domain_error("infer_s_zero: medium with b = 0 produces no diffuse signal");
    }
    const double denom =
        pi * medium.number_density() * b * b * medium.thickness() * phi * phi;
    const double s_zero = measured_a / denom;

    // The inversion drops the quartic term of the acceptance expansion;
    // require it below 1% of the quadratic one at the inferred value.
    const double c = medium.hard_sphere_diameter() * beam.momentum() / constants::hbar;
    const double quartic =
        phi * phi * std::abs((1.0 - s_zero) * c * c / 20.0 - s_zero / 12.0);
    if (quartic >= 0.01 * s_zero) {
        throw small_angle_validity_error(
            "infer_s_zero: at phi = " + std::to_string(phi)
            + " rad the quartic term is " + std::to_string(quartic / s_zero)
            + " of the quadratic one (limit 0.01); use a smaller acceptance angle");
    }
    return s_zero;
}

}  // namespace noptica
