// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "noptica/interferometry.hpp"

using namespace noptica;

namespace {
constexpr double pi = std::numbers::pi;

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("visibility budget: b = 0 leaves everything at unity") {
    const Medium medium(2.7e25, 0.0, 3e-10, 1e-2);
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);
    const VisibilityBudget budget = visibility_budget(medium, beam, model, 1e-3);
    CHECK(budget.a_phi == 0.0);
    CHECK(budget.coherent_flux_fraction == 1.0);
    CHECK(budget.transmitted_flux_fraction == 1.0);
    CHECK(budget.corrected_fringe_amplitude == 1.0);
    CHECK(budget.first_order_valid);
}

TEST_CASE("visibility budget: full acceptance recovers the A(pi) identity") {
    const Medium medium(2.7e25, 6e-15, 3e-10, 1e-2);
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);
    const VisibilityBudget budget = visibility_budget(medium, beam, model, pi);

    const double optical_depth = medium.number_density()
                                 * diffusion_cross_section(medium, beam, model)
                                 * medium.thickness();
    CHECK(rel_diff(budget.a_phi, optical_depth) < 1e-8);
    CHECK(rel_diff(budget.transmitted_flux_fraction,
                   std::exp(-optical_depth) + optical_depth) < 1e-8);
    CHECK(budget.first_order_valid);  // this sample is optically thin

    // budget ordering; the first-order re-entry overshoots unity by at
    // most optical_depth^2 / 2
    CHECK(budget.coherent_flux_fraction <= budget.transmitted_flux_fraction);
    CHECK(budget.transmitted_flux_fraction <= 1.0 + optical_depth * optical_depth);
    CHECK(budget.corrected_fringe_amplitude <= budget.transmitted_flux_fraction);

    CHECK_THROWS_AS(visibility_budget(medium, beam, model, -0.1), domain_error);
    CHECK_THROWS_AS(visibility_budget(medium, beam, model, 3.2), domain_error);
}

TEST_CASE("visibility budget: perfect-crystal correction is vanishingly small") {
    const Medium medium(2.7e25, 6e-15, 3e-10, 1e-2);
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);
    const VisibilityBudget budget = visibility_budget(medium, beam, model, 5e-6);
    CHECK(budget.a_phi >= 1e-16);
    CHECK(budget.a_phi <= 1e-13);
    CHECK(budget.transmitted_flux_fraction
          == budget.coherent_flux_fraction + budget.a_phi);
}

TEST_CASE("visibility budget: fringe amplitude shrinks with density and thickness") {
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto amplitude = [&](double n_o, double b, double d) {
        const Medium medium(n_o, b, 0.0, d);
        const auto model = StructureModel::hard_sphere(0.0, n_o);
        return visibility_budget(medium, beam, model, 1e-4).corrected_fringe_amplitude;
    };
    const double base = amplitude(2.7e25, 6e-15, 1e-2);
    CHECK(amplitude(5.4e25, 6e-15, 1e-2) < base);
    CHECK(amplitude(2.7e25, 12e-15, 1e-2) < base);
    CHECK(amplitude(2.7e25, 6e-15, 2e-2) < base);
}

TEST_CASE("s_zero inference: round trip through the closed form") {
    const Medium medium(2.7e25, 6e-15, 3e-10, 1e-2);
    const Beam beam = beam_from_wavelength(1.8e-10);
    const double phi = 1e-4;
    const double synthetic = acceptance_closed_form(medium, beam, phi);
    const double inferred = infer_s_zero(synthetic, medium, beam, phi);
    const double expected = 1.0 - medium.packing_fraction();
    CHECK(std::abs(inferred - expected) / expected < 0.005);

    // error shrinks like phi^2
    const double coarse = std::abs(
        infer_s_zero(acceptance_closed_form(medium, beam, 4e-4), medium, beam, 4e-4)
        - expected);
    const double fine = std::abs(
        infer_s_zero(acceptance_closed_form(medium, beam, 1e-4), medium, beam, 1e-4)
        - expected);
    CHECK(coarse / fine > 8.0);  // expect 16 at second order
}

TEST_CASE("s_zero inference: trivial and error paths") {
    const Medium medium(2.7e25, 6e-15, 3e-10, 1e-2);
    const Beam beam = beam_from_wavelength(1.8e-10);

    CHECK(infer_s_zero(0.0, medium, beam, 1e-4) == 0.0);

    const double a1 = infer_s_zero(2e-16, medium, beam, 1e-4);
    const double a2 = infer_s_zero(4e-16, medium, beam, 1e-4);
    CHECK(rel_diff(a2, 2.0 * a1) < 1e-12);

    CHECK_THROWS_AS(infer_s_zero(-1e-18, medium, beam, 1e-4), domain_error);
    CHECK_THROWS_AS(infer_s_zero(1e-16, medium, beam, 0.0), domain_error);

    // wide angle: quartic term matters, inversion must refuse
    const double wide_a = acceptance_closed_form(medium, beam, 0.8);
    CHECK_THROWS_AS(infer_s_zero(wide_a, medium, beam, 0.8), small_angle_validity_error);

    const Medium inert(2.7e25, 0.0, 3e-10, 1e-2);
    CHECK_THROWS_AS(infer_s_zero(1e-16, inert, beam, 1e-4), domain_error);
}
