// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/optics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"
#include "noptica/diffuse.hpp"

namespace noptica {

namespace {

constexpr double pi = std::numbers::pi;

// Shared first-order form so that refractive_index_gs(first_order) and
// refractive_index_lax(f0 = -b) are equal bit for bit, not merely to
// round-off.
double first_order_index(double wavelength, double number_density, double f0) {
    return 1.0 + wavelength * wavelength / (2.0 * pi) * number_density * f0;
}

}  // namespace

double optical_potential(const Medium& medium) {
    using constants::hbar;
    using constants::neutron_mass;
    return 2.0 * pi * hbar * hbar / neutron_mass * medium.scattering_length()
           * medium.number_density();
}

double refractive_index_gs(const Medium& medium, const Beam& beam, IndexForm form) {
    if (form == IndexForm::first_order) {
        return first_order_index(beam.wavelength(), medium.number_density(),
                                 -medium.scattering_length());
    }
    const double radicand = 1.0 - optical_potential(medium) / beam.energy();
    if (radicand < 0.0) {
        throw total_reflection_error(
            "refractive_index_gs: beam energy " + std::to_string(beam.energy())
            + " J below the critical energy; the medium is totally reflecting");
    }
    return std::sqrt(radicand);
}

double refractive_index_lax(const Medium& medium,
                            const Beam& beam,
                            double f0,
                            double local_field_correction) {
    if (!std::isfinite(f0) || !std::isfinite(local_field_correction)) {
        throw domain_error("refractive_index_lax: arguments must be finite");
    }
    return first_order_index(beam.wavelength(), medium.number_density(),
                             local_field_correction * f0);
}

PhaseShift phase_shift(const Medium& medium, const Beam& beam, double sigma_t) {
    if (!(sigma_t >= 0.0) || !std::isfinite(sigma_t)) {
        throw domain_error("phase_shift: sigma_t must be >= 0");
    }
    PhaseShift chi;
    chi.chi_prime = -medium.number_density() * medium.scattering_length()
                    * beam.wavelength() * medium.thickness();
    chi.chi_double_prime = medium.number_density() * sigma_t * medium.thickness() / 2.0;
    return chi;
}

OpticalPotential complex_optical_potential(const Medium& medium,
                                           const Beam& beam,
                                           const StructureModel& model) {
    using constants::hbar;
    using constants::neutron_mass;
    const double b = medium.scattering_length();
    const double solid_angle = structure_solid_angle_integral(beam, model, pi);
    const double prefactor = 2.0 * pi * hbar * hbar / neutron_mass * medium.number_density();
    const double real_part = prefactor * b;
    const double imag_part =
        -prefactor * b * b / (4.0 * pi) * (beam.momentum() / hbar) * solid_angle;
    return OpticalPotential{{real_part, imag_part}};
}

}  // namespace noptica
