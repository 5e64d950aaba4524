// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/medium.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noptica {

Medium::Medium(double number_density,
               double scattering_length,
               double hard_sphere_diameter,
               double thickness,
               std::optional<double> temperature)
    : n_o_(number_density),
      b_(scattering_length),
      a_(hard_sphere_diameter),
      thickness_(thickness),
      temperature_(temperature) {
    if (!(n_o_ > 0.0) || !std::isfinite(n_o_)) {
        throw domain_error("Medium: number density must be positive, got "
                           + std::to_string(n_o_));
    }
    if (!std::isfinite(b_)) {
        throw domain_error("Medium: scattering length must be finite");
    }
    if (!(a_ >= 0.0) || !std::isfinite(a_)) {
        throw domain_error("Medium: hard-sphere diameter must be >= 0");
    }
    if (!(thickness_ > 0.0) || !std::isfinite(thickness_)) {
        throw domain_error("Medium: thickness must be positive");
    }
    if (temperature_ && !(*temperature_ > 0.0)) {
        throw domain_error("Medium: temperature must be positive when given");
    }
    if (!(packing_fraction() < 1.0)) {
        throw domain_error("Medium: packing fraction (4/3) pi a^3 n_o = "
                           + std::to_string(packing_fraction())
                           + " >= 1, outside the dilute-gas model");
    }
}

double Medium::packing_fraction() const {
    return 4.0 / 3.0 * std::numbers::pi * a_ * a_ * a_ * n_o_;
}

}  // namespace noptica
