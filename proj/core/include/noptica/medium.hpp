// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "noptica/errors.hpp"

namespace noptica {

/// Macroscopic sample traversed by the beam: a homogeneous medium of
/// point scatterers with number density \c n_o, bound scattering length
/// \c b and (for the dilute hard-sphere model) atomic diameter \c a.
///
/// All quantities are SI. \c b is real: absorption is not modeled, the
/// imaginary part of the optical potential comes entirely from diffuse
/// scattering.
class Medium {
  public:
    /// \param number_density  scatterers per unit volume [1/m^3], > 0
    /// \param scattering_length  bound coherent scattering length [m]
    /// \param hard_sphere_diameter  atomic diameter of the hard-sphere
    ///        model [m], >= 0 (0 disables excluded-volume correlations)
    /// \param thickness  sample thickness along the beam [m], > 0
    /// \param temperature  optional temperature [K], > 0; only consumed by
    ///        the compressibility sum rule
    Medium(double number_density,
           double scattering_length,
           double hard_sphere_diameter,
           double thickness,
           std::optional<double> temperature = std::nullopt);

    double number_density() const { return n_o_; }
    double scattering_length() const { return b_; }
    double hard_sphere_diameter() const { return a_; }
    double thickness() const { return thickness_; }
    const std::optional<double>& temperature() const { return temperature_; }

    /// Volume fraction (4/3) pi a^3 n_o occupied by the hard spheres.
    double packing_fraction() const;

  private:
    double n_o_;
    double b_;
    double a_;
    double thickness_;
    std::optional<double> temperature_;
};

}  // namespace noptica
