#include "modelatom/collision.hpp"

#include <cmath>
#include <string>

#include "modelatom/error.hpp"
#include "modelatom/observables.hpp"

namespace modelatom {

namespace {

void check(const CollisionParams& cp) {
    if (!(cp.M1 > 0 && cp.M2 > 0)) throw DomainError("masses must be positive");
    if (!(cp.v > 0)) throw DomainError("velocity must be positive");
    if (!(cp.r0 > 0)) throw DomainError("screening radius must be positive");
    if (!(cp.Z1 * cp.Z2 > 0))
        throw DomainError("collision time is derived for the repulsive branch Z1*Z2 > 0");
}

}  // namespace

double collision_time_exact(const CollisionParams& cp) {
    check(cp);
    if (!(cp.b >= 0 && cp.b < cp.r0))
        throw DomainError("impact parameter " + std::to_string(cp.b) + " outside [0, r0)");
    const double E = cp.kinetic_energy();
    const double p = cp.p();
    const double c = cp.Z1 * cp.Z2 / (2.0 * E);
    const double chord = std::sqrt(cp.r0 * cp.r0 - cp.b * cp.b);
    const double log_arg = (std::sqrt(p) * chord + cp.r0 + c) / std::sqrt(c * c + p * cp.b * cp.b);
    return 2.0 / cp.v * (chord / p + c / std::pow(p, 1.5) * std::log(log_arg));
}

double collision_alpha(const CollisionParams& cp) {
    check(cp);
    const double E = cp.kinetic_energy();
    const double screen = E / (E + cp.Z1 * cp.Z2 / cp.r0);
    return 2.0 + 2.0 / (1.0 + cp.v * cp.v * cp.r0 * screen);
}

double collision_time_approx(const CollisionParams& cp) {
    if (!(cp.b >= 0 && cp.b <= cp.r0))
        throw DomainError("impact parameter outside [0, r0]");
    const double E = cp.kinetic_energy();
    const double screen = E / (E + cp.Z1 * cp.Z2 / cp.r0);
    const double q = cp.b / cp.r0;
    return collision_alpha(cp) * cp.r0 / cp.v * screen * std::sqrt(1.0 - q * q);
}

double collision_time_avg(const CollisionParams& cp) {
    const double E = cp.kinetic_energy();
    const double screen = E / (E + cp.Z1 * cp.Z2 / cp.r0);
    return collision_alpha(cp) * cp.r0 / (3.0 * cp.v) * screen;
}

std::vector<SignEffectRow> sign_effect_ratio(const ModeSet& modes, double abs_Lambda,
                                             std::span<const double> v_grid) {
    std::vector<SignEffectRow> rows;
    rows.reserve(v_grid.size());
    for (double v : v_grid) {
        const Pulse plus{std::abs(abs_Lambda), v, PulseShape::sech2, modes.omega0(), 0.0};
        Pulse minus = plus;
        minus.Lambda = -plus.Lambda;
        const double up = total_shift(modes, plus, ModelKind::exact);
        const double down = total_shift(modes, minus, ModelKind::exact);
        rows.push_back({v, down / up - 1.0});
    }
    return rows;
}

}  // namespace modelatom
