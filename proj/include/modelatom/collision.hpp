#pragma once

#include <span>
#include <vector>

#include "modelatom/model_core.hpp"

namespace modelatom {

/// Classical atom–atom encounter in the truncated Coulomb (Mensing)
/// potential V(r) = Z1 Z2 (1/r - 1/r0), r < r0.
struct CollisionParams {
    double Z1 = 1;
    double Z2 = 2;
    double M1 = 1836.15;
    double M2 = 4 * 1836.15;
    double r0 = 0.75;  ///< screening radius
    double b = 0;      ///< impact parameter
    double v = 5;      ///< projectile velocity

    double reduced_mass() const { return M1 * M2 / (M1 + M2); }
    /// E = μv²/2.
    double kinetic_energy() const { return 0.5 * reduced_mass() * v * v; }
    /// p = 1 + (Z1Z2/r0)/E.
    double p() const { return 1.0 + Z1 * Z2 / r0 / kinetic_energy(); }
};

/// Time spent inside r < r0 in closed logarithmic form.
/// Throws DomainError for b >= r0, Z1Z2 <= 0 or nonpositive masses/velocity.
double collision_time_exact(const CollisionParams& cp);

/// α(v)(r0/v) E/(E+Z1Z2/r0) √(1-b²/r0²).
double collision_time_approx(const CollisionParams& cp);

/// α(v) = 2 + 2/(1 + v² r0 E/(E+Z1Z2/r0)); 4 at v→0, 2 at v→∞.
double collision_alpha(const CollisionParams& cp);

/// Impact-parameter average α(v) r0/(3v) E/(E+Z1Z2/r0); cp.b is ignored.
double collision_time_avg(const CollisionParams& cp);

struct SignEffectRow {
    double v = 0;
    double ratio = 0; ///< ΔE_t(-|Λ|)/ΔE_t(+|Λ|) - 1 at β = v
};

/// Exact two-mode sign-effect ratio with β = v at each grid velocity.
/// Throws IonizationRegime unless |Λ| < 1-2λ.
std::vector<SignEffectRow> sign_effect_ratio(const ModeSet& modes, double abs_Lambda,
                                             std::span<const double> v_grid);

}  // namespace modelatom
