// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace noptica {
namespace constants {

/// Planck constant [J s], exact by SI definition.
inline constexpr double planck = 6.62607015e-34;

/// Reduced Planck constant [J s].
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);

/// Neutron mass [kg], CODATA 2018.
inline constexpr double neutron_mass = 1.67492749804e-27;

/// Boltzmann constant [J/K], exact by SI definition.
inline constexpr double boltzmann = 1.380649e-23;

}  // namespace constants
}  // namespace noptica
