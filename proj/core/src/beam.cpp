// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/beam.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noptica/constants.hpp"

namespace noptica {

namespace {
constexpr double two_pi_hbar = 2.0 * std::numbers::pi * constants::hbar;
}

Beam::Beam(double momentum) : p0_(momentum) {
    if (!(p0_ > 0.0) || !std::isfinite(p0_)) {
        throw domain_error("Beam: momentum must be positive, got " + std::to_string(p0_));
    }
}

Beam Beam::from_wavelength(double wavelength) {
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw domain_error("Beam: wavelength must be positive, got "
                           + std::to_string(wavelength));
    }
    return Beam(two_pi_hbar / wavelength);
}

double Beam::wavelength() const {
    return two_pi_hbar / p0_;
}

double Beam::energy() const {
    return p0_ * p0_ / (2.0 * constants::neutron_mass);
}

Beam beam_from_wavelength(double wavelength) {
    return Beam::from_wavelength(wavelength);
}

}  // namespace noptica
