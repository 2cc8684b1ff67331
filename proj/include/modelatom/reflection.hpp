#pragma once

#include <optional>
#include <string_view>

#include "modelatom/trajectory.hpp"

namespace modelatom {

enum class ReflectionMethod { analytic, ode_invariant, ode_fit };

std::string_view to_string(ReflectionMethod method);

struct ReflectionResult {
    double R = 0;                  ///< in [0, 1)
    std::optional<double> delta;   ///< asymptotic phase in (-π, π]; absent for analytic
    ReflectionMethod method = ReflectionMethod::analytic;
    double invariant = 0.5;        ///< K = (1/2)(1+R)/(1-R)
    double fit_rms = 0;            ///< residual of the late-time cosine fit
};

/// Post-pulse invariant K = (1/4)(1/B²)[1 + (BḂ/Ω0)² + B⁴].
double late_time_invariant(double Omega0, double B, double Bdot);

/// R from the invariant at the final node, δ from a least-squares fit of
/// B²(t) = (1+R)/(1-R) - 2√R/(1-R) cos(2Ω0 t + δ) over the post-pulse tail.
/// Throws DomainError if the trajectory ends inside the pulse and
/// IntegrationFailure if K < 1/2 beyond tolerance.
ReflectionResult extract_reflection(const Trajectory& traj);

/// R/(1-R) = cos²[(π/2)√(1+Λω0²/β²)] / sinh²[(π/2)Ω0/β] for the sech² pulse,
/// with cos → cosh when the radicand is negative. Evaluated in log space.
double analytic_reflection_ratio(double Omega0, const Pulse& pulse);

ReflectionResult analytic_reflection(double Omega0, const Pulse& pulse);

}  // namespace modelatom
