// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "noptica/errors.hpp"

namespace noptica {

/// Monochromatic incident neutron beam, characterized by the momentum
/// magnitude p0 [kg m/s]. Wavelength and kinetic energy are derived,
/// so lambda * p0 == 2 pi hbar holds to round-off by construction.
class Beam {
  public:
    /// \param momentum  p0 [kg m/s], > 0
    explicit Beam(double momentum);

    /// Build from the de Broglie wavelength lambda [m], > 0.
    static Beam from_wavelength(double wavelength);

    double momentum() const { return p0_; }

    /// de Broglie wavelength 2 pi hbar / p0 [m].
    double wavelength() const;

    /// Kinetic energy p0^2 / (2 m) [J].
    double energy() const;

  private:
    double p0_;
};

/// Free function mirror of Beam::from_wavelength.
Beam beam_from_wavelength(double wavelength);

}  // namespace noptica
