// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/diffuse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"
#include "noptica/numerics.hpp"

namespace noptica {

namespace {
constexpr double pi = std::numbers::pi;

void require_phi(double phi) {
    if (!(phi >= 0.0) || !(phi <= pi)) {
        throw domain_error("acceptance: phi = " + std::to_string(phi)
                           + " outside [0, pi]");
    }
}
}  // namespace

double momentum_transfer(const Beam& beam, double theta) {
    return 2.0 * (beam.momentum() / constants::hbar) * std::sin(theta / 2.0);
}

double structure_solid_angle_integral(const Beam& beam,
                                      const StructureModel& model,
                                      double phi_max) {
    require_phi(phi_max);
    if (phi_max == 0.0) return 0.0;
    const auto integrand = [&](double theta) {
        return std::sin(theta) * model(momentum_transfer(beam, theta));
    };
    return 2.0 * pi * integrate(integrand, 0.0, phi_max, 1e-11);
}

double diffusion_cross_section(const Medium& medium,
                               const Beam& beam,
                               const StructureModel& model) {
    const double b = medium.scattering_length();
    return b * b * structure_solid_angle_integral(beam, model, pi);
}

double attenuation_rate(const Medium& medium,
                        const Beam& beam,
                        const StructureModel& model) {
    return medium.number_density() * (beam.momentum() / constants::neutron_mass)
           * diffusion_cross_section(medium, beam, model);
}

double acceptance_closed_form(const Medium& medium, const Beam& beam, double phi) {
    require_phi(phi);
    const double n_o = medium.number_density();
    const double b = medium.scattering_length();
    const double d = medium.thickness();
    const double a = medium.hard_sphere_diameter();
    const double p0 = beam.momentum();

    // 1 - cos(phi) = 2 sin^2(phi/2), stable down to microradian angles.
    const double u = std::sin(phi / 2.0);
    double brace = 2.0 * u * u;
    if (a > 0.0) {
        // 3 [1 - S_c(0)] (hbar/(a p0))^2 written as 4 pi n_o a (hbar/p0)^2,
        // which stays finite through a -> 0.
        const double hbar_over_p0 = constants::hbar / p0;
        const double coeff = 4.0 * pi * n_o * a * hbar_over_p0 * hbar_over_p0;
        const double x = 2.0 * (a * p0 / constants::hbar) * u;
        brace += coeff * sinc_minus_one(x);
    }
    return 2.0 * pi * n_o * b * b * d * brace;
}

double acceptance_quadrature(const Medium& medium,
                             const Beam& beam,
                             const StructureModel& model,
                             double phi) {
    const double b = medium.scattering_length();
    return medium.number_density() * b * b * medium.thickness()
           * structure_solid_angle_integral(beam, model, phi);
}

double acceptance_small_angle(const Medium& medium,
                              const Beam& beam,
                              double phi,
                              bool leading_only) {
    if (!(phi >= 0.0) || !std::isfinite(phi)) {
        throw domain_error("acceptance_small_angle: phi must be >= 0");
    }
    const double n_o = medium.number_density();
    const double b = medium.scattering_length();
    const double d = medium.thickness();
    const double a = medium.hard_sphere_diameter();
    const double s0 = 1.0 - 4.0 / 3.0 * pi * a * a * a * n_o;

    const double phi2 = phi * phi;
    double braces = phi2 * s0;
    if (!leading_only) {
        const double c = a * beam.momentum() / constants::hbar;
        braces += phi2 * phi2 * ((1.0 - s0) * c * c / 20.0 - s0 / 12.0);
    }
    return pi * n_o * b * b * d * braces;
}

AcceptanceCurve sample_acceptance_curve(const Medium& medium,
                                        const Beam& beam,
                                        const StructureModel& model,
                                        const std::vector<double>& phi) {
    AcceptanceCurve curve;
    curve.phi = phi;
    curve.a.reserve(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        require_phi(phi[i]);
        if (i > 0 && !(phi[i] > phi[i - 1])) {
            throw domain_error("sample_acceptance_curve: angles must be strictly increasing");
        }
        curve.a.push_back(acceptance_quadrature(medium, beam, model, phi[i]));
    }
    for (std::size_t i = 0; i + 1 < curve.a.size(); ++i) {
        if (curve.a[i + 1] < curve.a[i] * (1.0 - 1e-12) - 1e-300) {
            throw numeric_error("sample_acceptance_curve: A(phi) decreased; the structure "
                                "factor is negative somewhere in the sampled range");
        }
    }
    curve.medium_id = "n_o=" + std::to_string(medium.number_density())
                      + ",b=" + std::to_string(medium.scattering_length())
                      + ",a=" + std::to_string(medium.hard_sphere_diameter())
                      + ",D=" + std::to_string(medium.thickness());
    curve.beam_id = "p0=" + std::to_string(beam.momentum());
    curve.model_id = model.is_hard_sphere() ? "hard_sphere" : "sampled";
    return curve;
}

}  // namespace noptica
