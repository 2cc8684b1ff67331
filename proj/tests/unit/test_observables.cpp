#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "modelatom/collision.hpp"
#include "modelatom/error.hpp"
#include "modelatom/observables.hpp"
#include "modelatom/reflection.hpp"

using namespace modelatom;
using doctest::Approx;

namespace {
const ModelParams figure_model{3.0, 0.375};
const double Lambda = 2.0 / 9.0;
}

TEST_CASE("single-mode shift") {
    const Pulse p = make_pulse(figure_model, Lambda, 3.0);
    CHECK(mode_shift(2.0, p) == Approx(oracle::shift_single).epsilon(1e-13));
    CHECK(mode_shift(2.0, p, ReflectionRoute::ode) == Approx(oracle::shift_single).epsilon(1e-8));
    CHECK(mode_reflection(2.0, p) == Approx(oracle::R_single).epsilon(1e-13));
    CHECK(energy_shift(2.0, oracle::R_single) == Approx(oracle::shift_single).epsilon(1e-12));
    CHECK_THROWS_AS(energy_shift(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(energy_shift(2.0, -0.1), DomainError);
}

TEST_CASE("report totals") {
    const ModeSet m = derive_modes(figure_model);
    const Pulse p = make_pulse(figure_model, Lambda, 3.0);
    const EnergyShiftReport r = energy_shift_report(m, p);
    CHECK(r.exact == Approx(mode_shift(m.omega1, p) + mode_shift(m.omega2, p)));
    CHECK(r.hf == Approx(2 * mode_shift(m.omega_e, p)));
    CHECK(r.ks == Approx(2 * mode_shift(m.omega_d, p)));
    CHECK(r.natural == Approx(2 * mode_shift(m.omega_w, p)));
    CHECK(r.total(ModelKind::ks) == r.ks);
    CHECK(total_shift(m, p, ModelKind::natural) == r.natural);
}

TEST_CASE("ordering of the independent-particle shifts") {
    const ModeSet m = derive_modes(figure_model);
    for (double L : {Lambda, -Lambda})
        for (double beta = 0.25; beta <= 10; beta *= 1.1) {
            const EnergyShiftReport r = energy_shift_report(m, make_pulse(figure_model, L, beta));
            CHECK(r.hf < r.natural);
            CHECK(r.natural < r.ks);
        }
}

TEST_CASE("Born limit") {
    const ModeSet m = derive_modes(figure_model);
    const Pulse p = make_pulse(figure_model, 1e-4, 2.0);
    CHECK(born_shift(m.omega2, p) == Approx(mode_shift(m.omega2, p)).epsilon(1e-3));
    Pulse q = p;
    q.Lambda = -p.Lambda;
    CHECK(born_shift(m.omega2, q) == born_shift(m.omega2, p));
}

TEST_CASE("sudden limit") {
    const ModeSet m = derive_modes(figure_model);
    const Pulse p = make_pulse(figure_model, -Lambda, 50.0);
    const SuddenShift s = sudden_shift(m.omega1, p);
    CHECK(s.valid);
    CHECK(s.value == Approx(mode_shift(m.omega1, p)).epsilon(1e-5));
    CHECK_FALSE(sudden_shift(m.omega1, make_pulse(figure_model, Lambda, 3.0)).valid);
}

TEST_CASE("transition weights") {
    for (double R : {0.01, 0.3, 0.8}) {
        const TransitionWeights w = transition_weights(R, 200);
        CHECK(w.weights.size() == 201);
        CHECK(w.total() + w.tail_bound >= 1.0 - 1e-15);
        CHECK(w.total() == Approx(1.0).epsilon(1e-12));
        CHECK(w.weights[0] == Approx(std::sqrt(1 - R)));
        CHECK(w.weights[1] == Approx(0.5 * std::sqrt(1 - R) * R));
        CHECK(statistical_shift(2.0, w) == Approx(energy_shift(2.0, R)).epsilon(1e-10));
    }
    // Deep n without overflow.
    const TransitionWeights deep = transition_weights(0.99, 3000);
    for (double x : deep.weights) CHECK(std::isfinite(x));
}

TEST_CASE("overlaps") {
    const ModeSet m = derive_modes(figure_model);
    const Pulse p = make_pulse(figure_model, Lambda, 3.0);
    const double R1 = mode_reflection(m.omega1, p), R2 = mode_reflection(m.omega2, p);
    CHECK(overlap(m, p, OverlapKind::exact) == Approx(mode_overlap(R1) * mode_overlap(R2)));
    CHECK(overlap(m, p, OverlapKind::ks) == Approx(1 - mode_reflection(m.omega_d, p)));
    CHECK(mode_overlap(0.36) == Approx(0.8));
}

TEST_CASE("abrupt quench") {
    // Ω0 -> Ω: R = ((Ω-Ω0)/(Ω+Ω0))²
    const double W = std::sqrt(4.0 + 2.0);
    CHECK(abrupt_reflection(2.0, 2.0 / 9.0, 3.0) == Approx(std::pow((W - 2) / (W + 2), 2)));
    CHECK_THROWS_AS(abrupt_reflection(1.0, -1.0, 3.0), IonizationRegime);
}

TEST_CASE("Berry connection limits") {
    const Pulse p = make_pulse(figure_model, Lambda, 3.0);
    const Trajectory tr = integrate_mode(2.0, p);
    CHECK(berry_connection(tr, tr.t_start()) == Approx(1.0).epsilon(1e-12));
    CHECK(berry_connection(tr, tr.t_end()) == Approx(1.0 + oracle::shift_single).epsilon(1e-8));
}

TEST_CASE("limits of the total shift") {
    const ModeSet m = derive_modes(figure_model);
    CHECK(total_shift(m, make_pulse(figure_model, Lambda, 1e-2), ModelKind::exact) < 1e-100);
    CHECK(total_shift(m, make_pulse(figure_model, -Lambda, 1e-2), ModelKind::exact) < 1e-10);
    CHECK(total_shift(m, make_pulse(figure_model, Lambda, 1e3), ModelKind::exact) < 1e-6);
}

TEST_CASE("collision time against quadrature") {
    for (double v : {0.5, 2.0, 5.0, 20.0})
        for (double b : {0.0, 0.3, 0.7}) {
            CollisionParams cp;
            cp.v = v;
            cp.b = b;
            const double q = oracle::collision_time_quadrature(cp.Z1 * cp.Z2, cp.reduced_mass(), cp.r0, b, v);
            CHECK(collision_time_exact(cp) == Approx(q).epsilon(1e-9));
        }
    CollisionParams bad;
    bad.b = 0.75;
    CHECK_THROWS_AS(collision_time_exact(bad), DomainError);
    bad.b = 0;
    bad.Z1 = -1;
    CHECK_THROWS_AS(collision_time_exact(bad), DomainError);
}

TEST_CASE("collision time approximations") {
    CollisionParams cp;
    // Light projectile so the Coulomb term is visible.
    cp.M1 = cp.M2 = 1.0;
    cp.v = 1e-3;
    CHECK(collision_alpha(cp) == Approx(4.0).epsilon(1e-5));
    cp.v = 1e4;
    CHECK(collision_alpha(cp) == Approx(2.0).epsilon(1e-5));

    CollisionParams fast;
    fast.v = 5.0;
    // Impact-parameter average with weight b db / r0².
    const double avg = oracle::trapezoid(
        [&](double b) {
            CollisionParams c = fast;
            c.b = std::min(b, 0.75 * (1 - 1e-12));
            return b * collision_time_exact(c);
        },
        0.0, 0.75, 4001) / (0.75 * 0.75);
    CHECK(collision_time_avg(fast) == Approx(avg).epsilon(0.15));
}

TEST_CASE("sign-effect ratio") {
    const ModeSet m = derive_modes(figure_model);
    const std::vector<double> vs{4.0, 5.0, 8.0, 12.0};
    const auto rows = sign_effect_ratio(m, Lambda, vs);
    CHECK(rows[0].ratio == Approx(0.1332).epsilon(1e-3));
    CHECK(rows[1].ratio == Approx(0.0833).epsilon(1e-3));
    CHECK(rows[2].ratio == Approx(0.0317).epsilon(2e-3));
    CHECK(rows[3].ratio == Approx(0.01399).epsilon(2e-3));
    CHECK_THROWS_AS(sign_effect_ratio(m, 0.3, vs), IonizationRegime);
}
