#include "modelatom/reflection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "modelatom/error.hpp"

namespace modelatom {

std::string_view to_string(ReflectionMethod method) {
    switch (method) {
        case ReflectionMethod::analytic: return "analytic";
        case ReflectionMethod::ode_invariant: return "ode_invariant";
        case ReflectionMethod::ode_fit: return "ode_fit";
    }
    return "?";
}

double late_time_invariant(double Omega0, double B, double Bdot) {
    const double b2 = B * B;
    const double r = B * Bdot / Omega0;
    return 0.25 / b2 * (1.0 + r * r + b2 * b2);
}

ReflectionResult extract_reflection(const Trajectory& traj) {
    const double w0 = traj.mode_frequency();
    const double off = traj.pulse_off_time();
    if (traj.t_end() <= off)
        throw DomainError("trajectory ends before the pulse has switched off");

    const ModeState& last = traj.nodes().back();
    const double K = late_time_invariant(w0, last.B, last.Bdot);
    if (K < 0.5 - 1e-8)
        throw IntegrationFailure("late-time invariant K = " + std::to_string(K) + " < 1/2");

    ReflectionResult out;
    out.method = ReflectionMethod::ode_invariant;
    out.invariant = K;
    out.R = std::max(0.0, (2.0 * K - 1.0) / (2.0 * K + 1.0));

    // B²(t) = a + b cos(2Ω0 t) + c sin(2Ω0 t) with b = -C cos δ, c = C sin δ.
    const double span = traj.t_end() - off;
    const int samples = std::max(64, static_cast<int>(32.0 * span * w0 / std::numbers::pi));
    Eigen::MatrixXd A(samples, 3);
    Eigen::VectorXd y(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = i + 1 == samples ? traj.t_end() : off + span * i / (samples - 1);
        const ModeState s = traj.at(t);
        A(i, 0) = 1.0;
        A(i, 1) = std::cos(2.0 * w0 * t);
        A(i, 2) = std::sin(2.0 * w0 * t);
        y(i) = s.B * s.B;
    }
    const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(y);
    out.fit_rms = std::sqrt((A * coef - y).squaredNorm() / samples);
    const double amplitude = std::hypot(coef(1), coef(2));
    if (amplitude > 1e-12) {
        out.delta = std::atan2(coef(2), -coef(1));
        out.method = ReflectionMethod::ode_fit;
    }
    return out;
}

namespace {

// log sinh(u) for u > 0
double log_sinh(double u) {
    if (u < 1.0) return std::log(std::sinh(u));
    return u + std::log1p(-std::exp(-2.0 * u)) - std::numbers::ln2;
}

double log_cosh(double u) {
    u = std::abs(u);
    return u + std::log1p(std::exp(-2.0 * u)) - std::numbers::ln2;
}

}  // namespace

double analytic_reflection_ratio(double Omega0, const Pulse& pulse) {
    if (pulse.shape != PulseShape::sech2)
        throw DomainError("closed-form reflection is only known for the sech2 pulse");
    const double half_pi = 0.5 * std::numbers::pi;
    const double radicand = 1.0 + pulse.coupling() / (pulse.beta * pulse.beta);

    double log_num;
    if (radicand >= 0.0) {
        const double c = std::cos(half_pi * std::sqrt(radicand));
        if (c == 0.0) return 0.0;
        log_num = 2.0 * std::log(std::abs(c));
    } else {
        log_num = 2.0 * log_cosh(half_pi * std::sqrt(-radicand));
    }
    const double log_den = 2.0 * log_sinh(half_pi * Omega0 / pulse.beta);
    return std::exp(log_num - log_den);
}

ReflectionResult analytic_reflection(double Omega0, const Pulse& pulse) {
    const double rho = analytic_reflection_ratio(Omega0, pulse);
    ReflectionResult out;
    out.method = ReflectionMethod::analytic;
    out.R = rho / (1.0 + rho);
    out.invariant = 0.5 + rho;  // (1/2)(1+R)/(1-R) = 1/2 + ρ
    return out;
}

}  // namespace modelatom
