// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/structure.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "noptica/constants.hpp"
#include "noptica/numerics.hpp"

namespace noptica {

namespace {

constexpr double pi = std::numbers::pi;

void require_strictly_increasing(const std::vector<double>& x, const char* what) {
    if (x.size() < 2) {
        throw domain_error(std::string(what) + ": need at least two samples");
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (!(x[i] < x[i + 1])) {
            throw domain_error(std::string(what) + ": abscissae must be strictly increasing");
        }
    }
}

void require_finite_nonnegative(const std::vector<double>& y, const char* what) {
    for (double v : y) {
        if (!std::isfinite(v) || v < 0.0) {
            throw domain_error(std::string(what) + ": ordinates must be finite and >= 0");
        }
    }
}

// Fritsch-Carlson endpoint slopes for a monotonicity-preserving cubic
// Hermite interpolant. Keeps the interpolant inside the local data range,
// so non-negative samples stay non-negative.
std::vector<double> monotone_cubic_slopes(const std::vector<double>& x,
                                          const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    }
    std::vector<double> m(n);
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        const double alpha = m[i] / d[i];
        const double beta = m[i + 1] / d[i];
        const double s = alpha * alpha + beta * beta;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            m[i] = tau * alpha * d[i];
            m[i + 1] = tau * beta * d[i];
        }
    }
    return m;
}

double hermite_eval(double x0, double x1, double y0, double y1, double m0, double m1,
                    double x) {
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return y0 * (2.0 * t3 - 3.0 * t2 + 1.0) + h * m0 * (t3 - 2.0 * t2 + t)
           + y1 * (-2.0 * t3 + 3.0 * t2) + h * m1 * (t3 - t2);
}

std::pair<std::vector<double>, std::vector<double>> read_two_column_csv(
    const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw domain_error(std::string(what) + ": cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw domain_error(std::string(what) + ": '" + path + "' is empty");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a;
        std::string b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b)) {
            throw domain_error(std::string(what) + ": '" + path + "' line "
                               + std::to_string(lineno) + ": expected two comma-separated columns");
        }
        try {
            xs.push_back(std::stod(a));
            ys.push_back(std::stod(b));
        } catch (const std::exception&) {
            throw domain_error(std::string(what) + ": '" + path + "' line "
                               + std::to_string(lineno) + ": cannot parse numbers");
        }
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace

double pair_correlation_hard_sphere(double r, double a) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw domain_error("pair_correlation_hard_sphere: r must be >= 0");
    }
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw domain_error("pair_correlation_hard_sphere: a must be >= 0");
    }
    return r < a ? 0.0 : 1.0;
}

double s_zero_sum_rule(double number_density, double temperature, double chi_t) {
    if (!(number_density > 0.0) || !(temperature > 0.0) || !(chi_t > 0.0)) {
        throw domain_error("s_zero_sum_rule: all arguments must be positive");
    }
    return number_density * constants::boltzmann * temperature * chi_t;
}

StructureModel::StructureModel(std::variant<HardSphere, Tabulated, PairCorrelation> v)
    : variant_(std::move(v)) {
    if (const auto* tab = std::get_if<Tabulated>(&variant_)) {
        tab_slopes_ = monotone_cubic_slopes(tab->q, tab->s);
    }
}

StructureModel StructureModel::hard_sphere(double diameter, double number_density) {
    if (!(diameter >= 0.0) || !std::isfinite(diameter)) {
        throw domain_error("StructureModel: hard-sphere diameter must be >= 0");
    }
    if (!(number_density > 0.0)) {
        throw domain_error("StructureModel: number density must be positive");
    }
    const double packing = 4.0 / 3.0 * pi * diameter * diameter * diameter * number_density;
    if (!(packing < 1.0)) {
        throw domain_error("StructureModel: packing fraction >= 1");
    }
    return StructureModel(HardSphere{diameter, number_density});
}

StructureModel StructureModel::tabulated(std::vector<double> q, std::vector<double> s) {
    require_strictly_increasing(q, "StructureModel(tabulated)");
    if (q.size() != s.size()) {
        throw domain_error("StructureModel(tabulated): column length mismatch");
    }
    if (!(q.front() >= 0.0)) {
        throw domain_error("StructureModel(tabulated): q must be >= 0");
    }
    require_finite_nonnegative(s, "StructureModel(tabulated)");
    return StructureModel(Tabulated{std::move(q), std::move(s)});
}

StructureModel StructureModel::pair_correlation(std::vector<double> r,
                                                std::vector<double> g,
                                                double number_density) {
    require_strictly_increasing(r, "StructureModel(pair_correlation)");
    if (r.size() != g.size()) {
        throw domain_error("StructureModel(pair_correlation): column length mismatch");
    }
    if (!(r.front() >= 0.0)) {
        throw domain_error("StructureModel(pair_correlation): r must be >= 0");
    }
    require_finite_nonnegative(g, "StructureModel(pair_correlation)");
    if (!(number_density > 0.0)) {
        throw domain_error("StructureModel(pair_correlation): number density must be positive");
    }
    return StructureModel(PairCorrelation{std::move(r), std::move(g), number_density});
}

StructureModel StructureModel::tabulated_from_csv(const std::string& path) {
    auto [q, s] = read_two_column_csv(path, "StructureModel(tabulated)");
    return tabulated(std::move(q), std::move(s));
}

StructureModel StructureModel::pair_correlation_from_csv(const std::string& path,
                                                         double number_density) {
    auto [r, g] = read_two_column_csv(path, "StructureModel(pair_correlation)");
    return pair_correlation(std::move(r), std::move(g), number_density);
}

const StructureModel::HardSphere& StructureModel::as_hard_sphere() const {
    if (const auto* hs = std::get_if<HardSphere>(&variant_)) {
        return *hs;
    }
    throw domain_error("StructureModel: not a hard-sphere model");
}

double StructureModel::operator()(double q) const {
    if (!(q >= 0.0) || !std::isfinite(q)) {
        throw domain_error("StructureModel: q must be >= 0 and finite");
    }

    if (const auto* hs = std::get_if<HardSphere>(&variant_)) {
        const double a = hs->diameter;
        // S(q) = 1 - 4 pi n_o a^3 * (sin x - x cos x)/x^3, x = qa; the
        // helper switches to its Taylor form below x = 1e-2, which keeps
        // the q -> 0 limit 1 - (4/3) pi a^3 n_o exact.
        const double x = q * a;
        const double s =
            1.0 - 4.0 * pi * hs->number_density * a * a * a * sin_minus_xcos_over_x3(x);
        return s;
    }

    if (const auto* tab = std::get_if<Tabulated>(&variant_)) {
        const auto& qs = tab->q;
        const auto& ss = tab->s;
        if (q < qs.front() || q > qs.back()) {
            throw extrapolation_error("StructureModel(tabulated): q = " + std::to_string(q)
                                      + " outside tabulated range [" + std::to_string(qs.front())
                                      + ", " + std::to_string(qs.back()) + "]");
        }
        const auto it = std::upper_bound(qs.begin(), qs.end(), q);
        const std::size_t i =
            it == qs.begin() ? 0 : std::min<std::size_t>(qs.size() - 2, (it - qs.begin()) - 1);
        return hermite_eval(qs[i], qs[i + 1], ss[i], ss[i + 1], tab_slopes_[i],
                            tab_slopes_[i + 1], q);
    }

    const auto& pc = std::get<PairCorrelation>(variant_);
    // 1 + 4 pi n_o Int r^2 (g(r) - 1) sinc(qr) dr over the linear
    // interpolant of the samples, one Gauss-Kronrod panel per segment so
    // the interpolation kinks never meet a quadrature panel interior.
    double integral = 0.0;
    double compensation = 0.0;
    for (std::size_t i = 0; i + 1 < pc.r.size(); ++i) {
        const double r0 = pc.r[i];
        const double r1 = pc.r[i + 1];
        const double g0 = pc.g[i];
        const double g1 = pc.g[i + 1];
        if (g0 == 1.0 && g1 == 1.0) continue;
        const auto segment = [&](double r) {
            const double t = (r - r0) / (r1 - r0);
            const double g = g0 + (g1 - g0) * t;
            const double qr = q * r;
            const double sinc = 1.0 + sinc_minus_one(qr);
            return r * r * (g - 1.0) * sinc;
        };
        const double part = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            segment, r0, r1, 3, 1e-12);
        // Kahan summation: segment contributions span many magnitudes.
        const double y = part - compensation;
        const double t = integral + y;
        compensation = (t - integral) - y;
        integral = t;
    }
    double s = 1.0 + 4.0 * pi * pc.number_density * integral;
    if (s < 0.0) {
        if (s < -1e-9) {
            throw numeric_error("StructureModel(pair_correlation): S(q) = " + std::to_string(s)
                                + " < 0 at q = " + std::to_string(q)
                                + "; samples are not a valid correlation function");
        }
        s = 0.0;  // round-off undershoot
    }
    return s;
}

double s_static(const StructureModel& model, double q) {
    return model(q);
}

}  // namespace noptica
