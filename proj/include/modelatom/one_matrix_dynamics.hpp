#pragma once

#include <complex>
#include <memory>

#include "modelatom/model_core.hpp"
#include "modelatom/trajectory.hpp"

namespace modelatom {

/// Time-dependent one-matrix parameters at one instant.
struct OneMatrixSnapshot {
    double t = 0;
    double omega_d_t = 0;
    double D_t = 0;
    double alpha_t = 0;
    double Z_t = 0;
    double omega1_t = 0, B1 = 1, Bdot1 = 0;
    double omega2_t = 0, B2 = 1, Bdot2 = 0;

    /// Tr Γ1²(t) = (1 + 2D(t)/ω_d(t))^(-1/2).
    double purity() const;
};

/// traj1 and traj2 must be integrated for ω1 and ω2 under the same pulse.
/// Throws DomainError for t outside either trajectory.
OneMatrixSnapshot onematrix_snapshot(const ModeSet& modes, const Trajectory& traj1,
                                     const Trajectory& traj2, double t);

/// Γ1(x1,x2,t) = φ_d(x1,t) φ_d*(x2,t) exp(-D(t)(x1-x2)²/2).
std::complex<double> gamma1_time(const OneMatrixSnapshot& snap, double x1, double x2);

/// φ_d(x,t) = (ω_d(t)/π)^(1/4) exp(-ω_d(t) x² [1 - iα/ω_d] / 2).
std::complex<double> ks_orbital(const OneMatrixSnapshot& snap, double x);

/// n(x,t) = Γ1(x,x,t).
double density(const OneMatrixSnapshot& snap, double x);

/// j(x,t) = x n(x,t) α(t).
double current(const OneMatrixSnapshot& snap, double x);

/// The three trajectories (ω1, ω2 and ω_d) needed for the one-matrix and
/// for both effective-potential variants, integrated under one pulse.
class OneMatrixSeries {
public:
    OneMatrixSeries(const ModeSet& modes, const Pulse& pulse, const IntegrationControls& controls = {});

    const ModeSet& modes() const { return modes_; }
    const Pulse& pulse() const { return pulse_; }
    const Trajectory& mode1() const { return *traj1_; }
    const Trajectory& mode2() const { return *traj2_; }
    const Trajectory& ks_mode() const { return *trajd_; }

    double t_start() const;
    double t_end() const;

    OneMatrixSnapshot snapshot(double t) const;

    /// Stencil spacing h = min(0.01/Ω0, 0.02/β) with Ω0 = ω1.
    double stencil_step() const;

    /// d²/dt² ω_d(t)^(-1/2) from a 5-point central stencil.
    /// Throws DomainError if the stencil leaves the sampled range.
    double inverse_sqrt_omega_d_curvature(double t) const;

private:
    ModeSet modes_;
    Pulse pulse_;
    std::shared_ptr<const Trajectory> traj1_, traj2_, trajd_;
};

enum class PotentialVariant { inverted, preoptimized };

/// inverted:     (1/2)x²ω_d²(t) - (1/2)x²√ω_d(t) d²/dt²[ω_d(t)^(-1/2)]
/// preoptimized: (1/2)x²[ω_d² + Λω0²F(t)]
double effective_potential(const OneMatrixSeries& series, double x, double t, PotentialVariant variant);

/// Total energy of the doubly occupied density-optimal orbital:
/// (1/2)ω_d[1 + α²/ω_d²] + (1/2)ω_d[1 - ω_d^(-3/2) d²/dt²(ω_d^(-1/2))].
double energy_expectation_ks(const OneMatrixSeries& series, double t);

}  // namespace modelatom
