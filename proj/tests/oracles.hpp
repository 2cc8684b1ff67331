#pragma once
// Reference values and independent evaluations used by the unit and
// acceptance tests. Frozen numbers were produced by a separate Python
// evaluation of the closed forms.

#include <cmath>
#include <complex>
#include <functional>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

// (omega0, lambda) = (3, 3/8)
inline constexpr double omega_e = 2.3717082451262845;
inline constexpr double omega_w = 2.1213203435596424;
inline constexpr double omega_d = 2.0;
inline constexpr double D = 0.125;
inline constexpr double Z = 0.029437251522859424;
inline constexpr double purity = 0.9428090415820635;

// Omega0 = 2, Lambda = 2/9, omega0 = 3, beta = 3
inline constexpr double R_single = 0.01714796881103318;
inline constexpr double shift_single = 0.034894304059765936;

// exact/ks crossing on the figure grid, both signs of Lambda
inline constexpr double crossing_beta = 2.8584459642712;

// Trapezoid sum of f over [a, b] with n points; spectrally accurate for
// integrands that decay to machine zero at both ends.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / (n - 1);
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n - 1; ++i) s += f(a + h * i);
    return s * h;
}

inline double trapezoid2(const std::function<double(double, double)>& f, double L, int n) {
    const double h = 2 * L / (n - 1);
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += f(-L + h * i, -L + h * j);
    return s * h * h;
}

// Time inside r < r0 from 2∫ dr / ṙ with ṙ = v sqrt(1 - V(r)/E - b²/r²),
// V(r) = Z1Z2(1/r - 1/r0), substituting r = r_min + u².
inline double collision_time_quadrature(double Z1Z2, double mu, double r0, double b, double v) {
    const double E = 0.5 * mu * v * v;
    const double p = 1 + Z1Z2 / r0 / E;
    const double c = Z1Z2 / (2 * E);
    // p r² - 2 c r - b² = 0
    const double disc = std::sqrt(c * c + p * b * b);
    const double r_min = (c + disc) / p, r_other = (c - disc) / p;
    const double u_max = std::sqrt(r0 - r_min);
    // p r² - 2cr - b² = p u² (r - r_other), so the u factor cancels.
    auto integrand = [&](double u) {
        const double r = r_min + u * u;
        return 4.0 * r / (v * std::sqrt(p * (r - r_other)));
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(integrand, 0.0, u_max);
}

// sech² reflection ratio R/(1-R) by direct complex evaluation, without
// the log-space rearrangement of the library.
inline double sech2_ratio(double Omega0, double coupling, double beta) {
    const double pi = std::acos(-1.0);
    const std::complex<double> root = std::sqrt(std::complex<double>(1.0 + coupling / (beta * beta), 0.0));
    const std::complex<double> c = std::cos(0.5 * pi * root);
    const double s = std::sinh(0.5 * pi * Omega0 / beta);
    return std::norm(c) / (s * s);
}

}  // namespace oracle
