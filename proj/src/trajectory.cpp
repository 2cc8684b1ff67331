#include "modelatom/trajectory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "modelatom/error.hpp"

namespace modelatom {

namespace {

namespace odeint = boost::numeric::odeint;

// Re ξ, Im ξ, Re ξ̇, Im ξ̇, γ
using State = std::array<double, 5>;

ModeState to_mode_state(double t, const State& x) {
    ModeState s;
    s.t = t;
    s.xi = {x[0], x[1]};
    s.dxi = {x[2], x[3]};
    s.B = std::abs(s.xi);
    s.Bdot = std::real(std::conj(s.xi) * s.dxi) / s.B;
    s.gamma = x[4];
    return s;
}

double wrap_to_pi(double a) {
    return a - 2.0 * std::numbers::pi * std::round(a / (2.0 * std::numbers::pi));
}

}  // namespace

Trajectory::Trajectory(double Omega0, Pulse pulse, IntegrationControls controls, std::vector<ModeState> nodes)
    : omega0_(Omega0), pulse_(pulse), controls_(controls), nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        throw DomainError("a trajectory needs at least two nodes");
}

double Trajectory::pulse_off_time() const {
    return pulse_.center + pulse_support(pulse_, controls_.start_tolerance);
}

ModeState Trajectory::at(double t) const {
    if (!(t >= t_start() && t <= t_end()))
        throw DomainError("time " + std::to_string(t) + " outside trajectory range [" +
                          std::to_string(t_start()) + ", " + std::to_string(t_end()) + "]");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](double v, const ModeState& s) { return v < s.t; });
    if (it == nodes_.end()) return nodes_.back();
    const ModeState& b = *it;
    const ModeState& a = *(it - 1);
    if (t == a.t) return a;

    const double h = b.t - a.t;
    const double s = (t - a.t) / h;
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    const double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
    const double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
    const double h2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
    const double h3 = 0.5 * (s3 - 2 * s4 + s5);
    const double h4 = -4 * s3 + 7 * s4 - 3 * s5;
    const double h5 = 10 * s3 - 15 * s4 + 6 * s5;

    const double w2a = omega_squared(omega0_, pulse_, a.t);
    const double w2b = omega_squared(omega0_, pulse_, b.t);
    const double rate_a = pulse_.coupling() * pulse_.envelope_rate(a.t);
    const double rate_b = pulse_.coupling() * pulse_.envelope_rate(b.t);

    const std::complex<double> dd_a = -w2a * a.xi;
    const std::complex<double> dd_b = -w2b * b.xi;
    const std::complex<double> ddd_a = -rate_a * a.xi - w2a * a.dxi;
    const std::complex<double> ddd_b = -rate_b * b.xi - w2b * b.dxi;

    ModeState out;
    out.t = t;
    out.xi = h0 * a.xi + h1 * h * a.dxi + h2 * h * h * dd_a + h3 * h * h * dd_b + h4 * h * b.dxi + h5 * b.xi;
    out.dxi = h0 * a.dxi + h1 * h * dd_a + h2 * h * h * ddd_a + h3 * h * h * ddd_b + h4 * h * dd_b + h5 * b.dxi;
    out.B = std::abs(out.xi);
    out.Bdot = std::real(std::conj(out.xi) * out.dxi) / out.B;

    // Cubic Hermite predictor for γ selects the branch of arg ξ.
    const double ga = std::imag(std::conj(a.xi) * a.dxi) / (a.B * a.B);
    const double gb = std::imag(std::conj(b.xi) * b.dxi) / (b.B * b.B);
    const double c0 = 2 * s3 - 3 * s2 + 1, c1 = s3 - 2 * s2 + s, c2 = -2 * s3 + 3 * s2, c3 = s3 - s2;
    const double predicted = c0 * a.gamma + c1 * h * ga + c2 * b.gamma + c3 * h * gb;
    out.gamma = predicted + wrap_to_pi(std::arg(out.xi) - predicted);
    return out;
}

double Trajectory::Bddot(double t) const {
    const ModeState s = at(t);
    const double w2 = omega_squared(omega0_, pulse_, t);
    return (std::norm(s.dxi) - w2 * s.B * s.B - s.Bdot * s.Bdot) / s.B;
}

void Trajectory::write_csv(std::ostream& out) const {
    out << "t,B,Bdot,gamma\n";
    char buf[128];
    for (const auto& n : nodes_) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", n.t, n.B, n.Bdot, n.gamma);
        out << buf;
    }
}

Trajectory integrate_mode(double Omega0, const Pulse& pulse, const IntegrationControls& controls) {
    if (!(Omega0 > 0.0))
        throw DomainError("mode frequency must be positive");
    if (!(pulse.beta > 0.0))
        throw DomainError("pulse beta must be positive");
    // Ω²(t) is smallest at the pulse center for Λ < 0.
    omega_squared(Omega0, pulse, pulse.center);

    const double half = controls.window_factor / pulse.beta;
    const double t0 = pulse.center - half;
    if (pulse.envelope(t0) > controls.start_tolerance)
        throw DomainError("integration window too short: F(t_start) = " +
                          std::to_string(pulse.envelope(t0)) + " exceeds " +
                          std::to_string(controls.start_tolerance));

    const double off = pulse.center + pulse_support(pulse, controls.start_tolerance);
    const double tail = controls.fit_periods * std::numbers::pi / Omega0;
    const double t1 = std::max(pulse.center + half, off + tail);

    const double omega_max = std::sqrt(Omega0 * Omega0 + std::max(0.0, pulse.coupling()));
    const double max_dt = controls.max_step / omega_max;

    auto system = [&](const State& x, State& dxdt, double t) {
        const double w2 = Omega0 * Omega0 + pulse.coupling() * pulse.envelope(t);
        dxdt[0] = x[2];
        dxdt[1] = x[3];
        dxdt[2] = -w2 * x[0];
        dxdt[3] = -w2 * x[1];
        const double b2 = x[0] * x[0] + x[1] * x[1];
        dxdt[4] = (x[0] * x[3] - x[1] * x[2]) / b2;
    };

    auto stepper = odeint::make_controlled(controls.atol, controls.rtol, max_dt,
                                           odeint::runge_kutta_fehlberg78<State>());

    const double phase0 = Omega0 * t0;
    State x{std::cos(phase0), std::sin(phase0), -Omega0 * std::sin(phase0), Omega0 * std::cos(phase0), phase0};
    double t = t0;
    double dt = max_dt;

    std::vector<ModeState> nodes;
    nodes.reserve(static_cast<std::size_t>((t1 - t0) / max_dt) + 16);
    nodes.push_back(to_mode_state(t, x));

    std::size_t attempts = 0;
    while (t < t1) {
        if (++attempts > controls.max_steps)
            throw IntegrationFailure("step budget exhausted at t = " + std::to_string(t));
        const double remaining = t1 - t;
        const bool last = dt >= remaining;
        double step = last ? remaining : dt;
        const double before = t;
        if (stepper.try_step(system, x, t, step) == odeint::success) {
            if (last) t = t1;
            for (double v : x)
                if (!std::isfinite(v))
                    throw IntegrationFailure("non-finite state at t = " + std::to_string(t));
            nodes.push_back(to_mode_state(t, x));
            dt = std::min(step, max_dt);
        } else {
            dt = step;
            if (dt < 1e-14 * std::max(1.0, std::abs(before)))
                throw IntegrationFailure("step size collapsed at t = " + std::to_string(before));
        }
    }
    return Trajectory(Omega0, pulse, controls, std::move(nodes));
}

double ermakov_residual(const Trajectory& traj, double t, double h) {
    auto B = [&](double s) { return traj.at(s).B; };
    const double b0 = B(t);
    const double bdd = (-B(t + 2 * h) + 16 * B(t + h) - 30 * b0 + 16 * B(t - h) - B(t - 2 * h)) / (12 * h * h);
    const double w0 = traj.mode_frequency();
    return bdd + omega_squared(w0, traj.pulse(), t) * b0 - w0 * w0 / (b0 * b0 * b0);
}

std::complex<double> mode_state(double Omega0, const ModeState& state, double X) {
    using namespace std::complex_literals;
    const double b2 = state.B * state.B;
    const double scale = Omega0 / b2;
    const std::complex<double> width = scale * (1.0 - 1i * state.B * state.Bdot / Omega0);
    const double norm = std::pow(scale / std::numbers::pi, 0.25);
    return norm * std::exp(-0.5 * X * X * width) * std::exp(-0.5i * state.gamma);
}

}  // namespace modelatom
