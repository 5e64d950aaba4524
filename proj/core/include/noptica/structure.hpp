// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "noptica/errors.hpp"

namespace noptica {

/// Hard-sphere pair correlation: 0 inside the excluded volume r < a,
/// 1 outside. The tie at r = a is broken to 1 (measure zero, integrals
/// are unaffected).
double pair_correlation_hard_sphere(double r, double a);

/// Low-q limit of the static structure factor from the isothermal
/// compressibility: S_c(0) = n_o k_B T chi_T, the mean square particle
/// number fluctuation per particle.
double s_zero_sum_rule(double number_density, double temperature, double chi_t);

/// Static structure factor S_c(q) of the correlated part of the density
/// response. Wavenumbers q are momentum transfer divided by hbar [1/m];
/// isotropic media, so only |q| enters.
///
/// Three interchangeable sources:
///  - HardSphere: closed form of the dilute hard-sphere gas,
///        S(q) = 1 - (4 pi n_o / q^3) (sin qa - qa cos qa),
///    with the analytic limit S(0) = 1 - (4/3) pi a^3 n_o.
///  - Tabulated: monotone-cubic interpolation of (q, S) samples.
///  - PairCorrelation: radial Fourier transform of sampled g(r),
///        S(q) = 1 + 4 pi n_o Int r^2 (g(r) - 1) sinc(qr) dr,
///    integrated segment-by-segment over the linear interpolant.
class StructureModel {
  public:
    struct HardSphere {
        double diameter;        // a [m], >= 0
        double number_density;  // n_o [1/m^3], > 0
    };
    struct Tabulated {
        std::vector<double> q;  // strictly increasing [1/m]
        std::vector<double> s;  // finite, >= 0
    };
    struct PairCorrelation {
        std::vector<double> r;  // strictly increasing, >= 0 [m]
        std::vector<double> g;  // finite, >= 0
        double number_density;  // n_o [1/m^3], > 0
    };

    static StructureModel hard_sphere(double diameter, double number_density);
    static StructureModel tabulated(std::vector<double> q, std::vector<double> s);
    static StructureModel pair_correlation(std::vector<double> r,
                                           std::vector<double> g,
                                           double number_density);

    /// Load a Tabulated model from a two-column CSV (q_per_m, S) with a
    /// one-line header.
    static StructureModel tabulated_from_csv(const std::string& path);

    /// Load a PairCorrelation model from a two-column CSV (r_m, g) with a
    /// one-line header.
    static StructureModel pair_correlation_from_csv(const std::string& path,
                                                    double number_density);

    bool is_hard_sphere() const { return std::holds_alternative<HardSphere>(variant_); }

    const HardSphere& as_hard_sphere() const;

    /// Evaluate S_c(q). q >= 0; Tabulated queries outside the sampled
    /// range throw extrapolation_error.
    double operator()(double q) const;

  private:
    explicit StructureModel(std::variant<HardSphere, Tabulated, PairCorrelation> v);

    std::variant<HardSphere, Tabulated, PairCorrelation> variant_;
    std::vector<double> tab_slopes_;  // monotone-cubic endpoint slopes (Tabulated)
};

/// Evaluate the static structure factor; free-function spelling of
/// StructureModel::operator().
double s_static(const StructureModel& model, double q);

}  // namespace noptica
