#pragma once

#include <vector>

#include "modelatom/model_core.hpp"
#include "modelatom/pulse.hpp"
#include "modelatom/reflection.hpp"
#include "modelatom/trajectory.hpp"

namespace modelatom {

/// How reflection coefficients are obtained. The closed sech² form is the
/// default; the ODE route integrates each mode and reads the invariant.
enum class ReflectionRoute { analytic, ode };

/// R(Ω0) by the chosen route.
double mode_reflection(double Omega0, const Pulse& pulse, ReflectionRoute route = ReflectionRoute::analytic,
                       const IntegrationControls& controls = {});

/// ΔE(Ω0) = Ω0 R/(1-R). Throws DomainError unless 0 <= R < 1.
double energy_shift(double Omega0, double R);

/// ΔE(Ω0) for the drive, by route. The analytic route evaluates Ω0·ρ directly.
double mode_shift(double Omega0, const Pulse& pulse, ReflectionRoute route = ReflectionRoute::analytic,
                  const IntegrationControls& controls = {});

/// exact: ΔE(ω1) + ΔE(ω2); hf/ks/natural: 2ΔE(ω_j), j = e, d, w.
double total_shift(const ModeSet& modes, const Pulse& pulse, ModelKind kind,
                   ReflectionRoute route = ReflectionRoute::analytic, const IntegrationControls& controls = {});

struct EnergyShiftReport {
    ModeSet modes;
    Pulse pulse;
    double shift_omega1 = 0;
    double shift_omega2 = 0;
    double exact = 0;
    double hf = 0;
    double ks = 0;
    double natural = 0;

    double total(ModelKind kind) const;
};

EnergyShiftReport energy_shift_report(const ModeSet& modes, const Pulse& pulse,
                                      ReflectionRoute route = ReflectionRoute::analytic,
                                      const IntegrationControls& controls = {});

/// First-order (Born) shift (Λω0²π/4β²)² Ω0 / sinh²[(π/2)Ω0/β]; even in Λ.
double born_shift(double Omega0, const Pulse& pulse);

struct SuddenShift {
    double value = 0;
    bool valid = false; ///< β >= 5·max(Ω0, sqrt|Λ|·ω0)
};

/// Large-β expansion of the shift, which keeps the sign of Λ.
SuddenShift sudden_shift(double Omega0, const Pulse& pulse);

struct TransitionWeights {
    double R = 0;
    std::vector<double> weights; ///< W_{2n,0}, n = 0..n_max
    double tail_bound = 0;       ///< R^(n_max+1) (1-R)^(-1/2)

    double total() const;
};

/// W_{2n,0} = Γ(n+1/2)/(√π Γ(n+1)) √(1-R) R^n, accumulated in log form.
TransitionWeights transition_weights(double R, int n_max = 200);

/// Ω0[Σ (2n + 1/2) W_{2n,0} - 1/2], the statistically weighted shift.
double statistical_shift(double Omega0, const TransitionWeights& weights);

enum class OverlapKind { exact, ks };

/// Long-time overlap with the initial ground state:
/// exact √(1-R(ω1))√(1-R(ω2)), ks 1-R(ω_d).
double overlap(const ModeSet& modes, const Pulse& pulse, OverlapKind kind,
               ReflectionRoute route = ReflectionRoute::analytic, const IntegrationControls& controls = {});

/// Single-mode |<φ0|φ(t→∞)>|² = √(1-R).
double mode_overlap(double R);

/// R_a for the sudden quench Ω0² -> Ω0² + Λω0².
/// Throws IonizationRegime when the final frequency squared is <= 0.
double abrupt_reflection(double Omega0, double Lambda, double omega0);

/// One-mode Berry connection (Ω0/4)[Ω²(t)B²/Ω0² + 1/B² + Ḃ²/Ω0²].
double berry_connection(const Trajectory& traj, double t);

}  // namespace modelatom
