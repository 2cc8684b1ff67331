#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "modelatom/pulse.hpp"

namespace modelatom {

struct IntegrationControls {
    double rtol = 1e-10;
    double atol = 1e-12;
    /// Half-window T = window_factor/β around the pulse center.
    double window_factor = 15.0;
    /// Largest |F| tolerated at the start and end of the window.
    double start_tolerance = 1e-12;
    /// Step cap in units of 1/Ω_max; keeps the dense interpolant accurate.
    double max_step = 0.025;
    /// Extra time appended after the window so the phase fit sees enough periods.
    int fit_periods = 6;
    std::size_t max_steps = 20'000'000;
};

/// Scale-function state of one mode at one instant.
struct ModeState {
    double t = 0;
    std::complex<double> xi;   ///< ξ(t) = B e^{iγ}
    std::complex<double> dxi;  ///< ξ̇(t)
    double B = 1;
    double Bdot = 0;
    double gamma = 0;          ///< continuous phase of ξ
};

/// Solution of ξ̈ + Ω²(t) ξ = 0 with ξ → e^{iΩ0 t} before the pulse.
/// Immutable once built; dense output via at().
class Trajectory {
public:
    Trajectory(double Omega0, Pulse pulse, IntegrationControls controls, std::vector<ModeState> nodes);

    double mode_frequency() const { return omega0_; }
    const Pulse& pulse() const { return pulse_; }
    const IntegrationControls& controls() const { return controls_; }

    double t_start() const { return nodes_.front().t; }
    double t_end() const { return nodes_.back().t; }
    /// First time after which the pulse is below the start tolerance.
    double pulse_off_time() const;

    /// Integrator step nodes, t increasing.
    std::span<const ModeState> nodes() const { return nodes_; }

    /// State at any t in [t_start, t_end]; quintic Hermite in ξ and ξ̇ using
    /// the exact second and third derivatives at the nodes.
    /// Throws DomainError outside the range.
    ModeState at(double t) const;

    /// B̈ from the equation of motion at t.
    double Bddot(double t) const;

    /// Writes "t,B,Bdot,gamma" rows for every node.
    void write_csv(std::ostream& out) const;

private:
    double omega0_;
    Pulse pulse_;
    IntegrationControls controls_;
    std::vector<ModeState> nodes_;
};

/// Integrates the linear complex oscillator for mode frequency Ω0 over
/// [center - T, center + T + fit tail]. Throws IonizationRegime when Ω²(t) <= 0
/// anywhere, DomainError when the window starts inside the pulse, and
/// IntegrationFailure on step-size collapse or a non-finite state.
Trajectory integrate_mode(double Omega0, const Pulse& pulse, const IntegrationControls& controls = {});

/// Ermakov residual B̈ + Ω²B - Ω0²/B³ at t, with B̈ from a 5-point stencil of
/// step h over the dense output.
double ermakov_residual(const Trajectory& traj, double t, double h);

/// Evolving mode wave function φ(X, Ω0, B, t) including the e^{-iγ/2} phase.
std::complex<double> mode_state(double Omega0, const ModeState& state, double X);

}  // namespace modelatom
