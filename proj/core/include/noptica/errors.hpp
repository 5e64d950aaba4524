// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace noptica {

/// Violated precondition or invalid physical parameter.
class domain_error : public std::invalid_argument {
  public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure: quadrature non-convergence, NaN in an integrator,
/// violated step-size guard.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Beam energy below the critical energy of the medium: the refractive-index
/// radicand is negative and the wave is totally reflected.
class total_reflection_error : public domain_error {
  public:
    explicit total_reflection_error(const std::string& what) : domain_error(what) {}
};

/// Query outside the range covered by tabulated data.
class extrapolation_error : public domain_error {
  public:
    explicit extrapolation_error(const std::string& what) : domain_error(what) {}
};

/// Acceptance angle too large for the quadratic small-angle inversion.
class small_angle_validity_error : public domain_error {
  public:
    explicit small_angle_validity_error(const std::string& what) : domain_error(what) {}
};

}  // namespace noptica
