#include "modelatom/one_matrix_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "modelatom/error.hpp"

namespace modelatom {

double OneMatrixSnapshot::purity() const { return 1.0 / std::sqrt(1.0 + 2.0 * D_t / omega_d_t); }

namespace {

bool same_frequency(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); }

}  // namespace

OneMatrixSnapshot onematrix_snapshot(const ModeSet& modes, const Trajectory& traj1,
                                     const Trajectory& traj2, double t) {
    if (!same_frequency(traj1.mode_frequency(), modes.omega1) ||
        !same_frequency(traj2.mode_frequency(), modes.omega2))
        throw DomainError("trajectories do not match the mode frequencies");

    const ModeState s1 = traj1.at(t);
    const ModeState s2 = traj2.at(t);

    OneMatrixSnapshot snap;
    snap.t = t;
    snap.B1 = s1.B;
    snap.Bdot1 = s1.Bdot;
    snap.B2 = s2.B;
    snap.Bdot2 = s2.Bdot;
    snap.omega1_t = modes.omega1 / (s1.B * s1.B);
    snap.omega2_t = modes.omega2 / (s2.B * s2.B);

    const double sum = snap.omega1_t + snap.omega2_t;
    const double dw = snap.omega1_t - snap.omega2_t;
    const double dc = s1.Bdot / s1.B - s2.Bdot / s2.B;
    snap.omega_d_t = 2.0 * snap.omega1_t * snap.omega2_t / sum;
    snap.D_t = 0.25 * (dw * dw + dc * dc) / sum;
    snap.alpha_t = snap.omega_d_t * 0.5 *
                   (s1.B * s1.Bdot / modes.omega1 + s2.B * s2.Bdot / modes.omega2);
    snap.Z_t = mehler_z(snap.D_t, snap.omega_d_t);
    return snap;
}

std::complex<double> ks_orbital(const OneMatrixSnapshot& snap, double x) {
    using namespace std::complex_literals;
    const double w = snap.omega_d_t;
    return std::pow(w / std::numbers::pi, 0.25) *
           std::exp(-0.5 * w * x * x * (1.0 - 1i * snap.alpha_t / w));
}

std::complex<double> gamma1_time(const OneMatrixSnapshot& snap, double x1, double x2) {
    const double d = x1 - x2;
    return ks_orbital(snap, x1) * std::conj(ks_orbital(snap, x2)) * std::exp(-0.5 * snap.D_t * d * d);
}

double density(const OneMatrixSnapshot& snap, double x) {
    const double w = snap.omega_d_t;
    return std::sqrt(w / std::numbers::pi) * std::exp(-w * x * x);
}

double current(const OneMatrixSnapshot& snap, double x) { return x * density(snap, x) * snap.alpha_t; }

OneMatrixSeries::OneMatrixSeries(const ModeSet& modes, const Pulse& pulse, const IntegrationControls& controls)
    : modes_(modes), pulse_(pulse) {
    check_admissible(pulse, modes);
    auto launch = [&](double w) {
        return std::async(std::launch::async, [w, &pulse, &controls] {
            return std::make_shared<const Trajectory>(integrate_mode(w, pulse, controls));
        });
    };
    auto f1 = launch(modes.omega1);
    auto f2 = launch(modes.omega2);
    auto fd = launch(modes.omega_d);
    traj1_ = f1.get();
    traj2_ = f2.get();
    trajd_ = fd.get();
}

double OneMatrixSeries::t_start() const {
    return std::max({traj1_->t_start(), traj2_->t_start(), trajd_->t_start()});
}

double OneMatrixSeries::t_end() const {
    return std::min({traj1_->t_end(), traj2_->t_end(), trajd_->t_end()});
}

OneMatrixSnapshot OneMatrixSeries::snapshot(double t) const {
    return onematrix_snapshot(modes_, *traj1_, *traj2_, t);
}

double OneMatrixSeries::stencil_step() const {
    return std::min(0.01 / modes_.omega1, 0.02 / pulse_.beta);
}

double OneMatrixSeries::inverse_sqrt_omega_d_curvature(double t) const {
    const double h = stencil_step();
    if (t - 2 * h < t_start() || t + 2 * h > t_end())
        throw DomainError("time-derivative stencil at t = " + std::to_string(t) +
                          " leaves the sampled range");
    // 1/ω_d(t) = (B1²/ω1 + B2²/ω2)/2
    auto f = [&](double s) {
        const double b1 = traj1_->at(s).B;
        const double b2 = traj2_->at(s).B;
        return std::sqrt(0.5 * (b1 * b1 / modes_.omega1 + b2 * b2 / modes_.omega2));
    };
    return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) / (12 * h * h);
}

double effective_potential(const OneMatrixSeries& series, double x, double t, PotentialVariant variant) {
    const double half_x2 = 0.5 * x * x;
    if (variant == PotentialVariant::preoptimized) {
        if (t < series.t_start() || t > series.t_end())
            throw DomainError("time outside the sampled range");
        const double wd = series.modes().omega_d;
        return half_x2 * (wd * wd + series.pulse().coupling() * series.pulse().envelope(t));
    }
    const double curvature = series.inverse_sqrt_omega_d_curvature(t);
    const double wd = series.snapshot(t).omega_d_t;
    return half_x2 * wd * wd - half_x2 * std::sqrt(wd) * curvature;
}

double energy_expectation_ks(const OneMatrixSeries& series, double t) {
    const double curvature = series.inverse_sqrt_omega_d_curvature(t);
    const OneMatrixSnapshot snap = series.snapshot(t);
    const double wd = snap.omega_d_t;
    const double ratio = snap.alpha_t / wd;
    const double kinetic = 0.5 * wd * (1.0 + ratio * ratio);
    const double potential = 0.5 * wd * (1.0 - curvature / std::pow(wd, 1.5));
    return kinetic + potential;
}

}  // namespace modelatom
