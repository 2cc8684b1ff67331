#include <doctest.h>

#include <array>
#include <cmath>

#include "../oracles.hpp"
#include "modelatom/error.hpp"
#include "modelatom/model_core.hpp"
#include "modelatom/validation.hpp"

using namespace modelatom;
using doctest::Approx;

namespace {
const ModelParams figure_model{3.0, 0.375};
}

TEST_CASE("frequencies of the figure model") {
    const ModeSet m = derive_modes(figure_model);
    CHECK(m.omega1 == 3.0);
    CHECK(m.omega2 == 1.5);
    CHECK(m.omega_e == Approx(oracle::omega_e).epsilon(1e-14));
    CHECK(m.omega_w == Approx(oracle::omega_w).epsilon(1e-14));
    CHECK(m.omega_d == Approx(oracle::omega_d).epsilon(1e-14));
    CHECK(m.D == Approx(oracle::D).epsilon(1e-14));
    CHECK(m.Z == Approx(oracle::Z).epsilon(1e-13));
    CHECK(m.E0 == Approx(2.25));
    CHECK(m.C1 == Approx(0.125));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(ModelParams{0.0, 0.1}), DomainError);
    CHECK_THROWS_AS(validate(ModelParams{3.0, 0.5}), DomainError);
    CHECK_THROWS_AS(validate(ModelParams{3.0, -0.1}), DomainError);
    CHECK_NOTHROW(validate(ModelParams{3.0, 0.0}));
}

TEST_CASE("uncorrelated limit") {
    const ModeSet m = derive_modes({2.0, 0.0});
    CHECK(m.Z == 0.0);
    CHECK(m.D == 0.0);
    CHECK(static_purity(m) == Approx(1.0));
    const auto spec = occupation_spectrum(m, 5);
    CHECK(spec.weights[0] == 1.0);
}

TEST_CASE("model kinds") {
    const ModeSet m = derive_modes(figure_model);
    CHECK(model_frequency(m, ModelKind::hf) == m.omega_e);
    CHECK(model_frequency(m, ModelKind::ks) == m.omega_d);
    CHECK(model_frequency(m, ModelKind::natural) == m.omega_w);
    CHECK_THROWS_AS(model_frequency(m, ModelKind::exact), DomainError);
    for (auto k : {ModelKind::exact, ModelKind::hf, ModelKind::ks, ModelKind::natural})
        CHECK(parse_model_kind(to_string(k)) == k);
}

TEST_CASE("purity against two-dimensional quadrature") {
    const ModeSet m = derive_modes(figure_model);
    const double L = 8 / std::sqrt(m.omega_d);
    const double tr = oracle::trapezoid2(
        [&](double a, double b) {
            const double g = gamma1_static(m, a, b);
            return g * g;
        },
        L, 301);
    CHECK(tr == Approx(oracle::purity).epsilon(1e-11));
    CHECK(static_purity(m) == Approx(oracle::purity).epsilon(1e-14));
}

TEST_CASE("one-matrix is the partial trace of the exact state") {
    const ModeSet m = derive_modes(figure_model);
    const double L = 10 / std::sqrt(m.omega2);
    for (auto [x1, x2] : {std::array{0.0, 0.0}, std::array{0.3, -0.4}, std::array{1.1, 0.2}}) {
        const double direct = oracle::trapezoid(
            [&](double y) {
                return model_wavefunction(ModelKind::exact, m, x1, y) * model_wavefunction(ModelKind::exact, m, x2, y);
            },
            -L, L, 801);
        CHECK(gamma1_static(m, x1, x2) == Approx(direct).epsilon(1e-11));
    }
}

TEST_CASE("wave functions are normalized") {
    const ModeSet m = derive_modes(figure_model);
    for (auto k : {ModelKind::exact, ModelKind::hf, ModelKind::ks, ModelKind::natural}) {
        const double n = oracle::trapezoid2(
            [&](double a, double b) {
                const double p = model_wavefunction(k, m, a, b);
                return p * p;
            },
            9 / std::sqrt(m.omega2), 301);
        CHECK(n == Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("Hermite functions are orthonormal up to high order") {
    const double w = 1.7;
    for (int j : {0, 3, 20, 49})
        for (int k : {0, 3, 20, 49}) {
            const double ip = oracle::trapezoid(
                [&](double x) { return hermite_function(w, j, x) * hermite_function(w, k, x); }, -14, 14, 4001);
            CHECK(ip == Approx(j == k ? 1.0 : 0.0).epsilon(1e-10));
        }
    CHECK(std::isfinite(hermite_function(w, kMaxHermiteOrder, 3.0)));
    CHECK_THROWS_AS(hermite_function(w, kMaxHermiteOrder + 1, 0.0), DomainError);
    CHECK_THROWS_AS(hermite_function(w, -1, 0.0), DomainError);
}

TEST_CASE("natural orbitals diagonalize the one-matrix") {
    const ModeSet m = derive_modes(figure_model);
    const double L = 8 / std::sqrt(m.omega_d);
    for (int k : {0, 1, 4}) {
        const double x = 0.37;
        const double applied = oracle::trapezoid(
            [&](double y) { return gamma1_static(m, x, y) * natural_orbital(m, k, y); }, -L, L, 801);
        const double Pk = (1 - m.Z) * std::pow(m.Z, k);
        CHECK(applied == Approx(Pk * natural_orbital(m, k, x)).epsilon(1e-10));
    }
}

TEST_CASE("spectral oracle") {
    for (double lam : {0.1, 0.375, 0.45}) CHECK(spectral_oracle_error({3.0, lam}, 512, 10) < 1e-6);
}

TEST_CASE("occupation spectrum and tail") {
    const ModeSet m = derive_modes(figure_model);
    const auto s = occupation_spectrum(m, 10);
    CHECK(s.weights.size() == 11);
    CHECK(s.total() == Approx(1.0).epsilon(1e-15));
    CHECK(s.tail_mass == Approx(std::pow(m.Z, 11)));
    CHECK_THROWS(occupation_spectrum(m, -1));
    const auto e = escort(s, 2.0);
    CHECK(e.Z == Approx(m.Z * m.Z));
    CHECK(e.total() == Approx(1.0));
}

TEST_CASE("entropies match truncated sums") {
    const auto s = occupation_spectrum_from_z(0.4, 300);
    const std::array orders{0.5, 2.0, 3.0};
    const Entropies e = entropies(s, orders);
    double vn = 0;
    for (double p : s.weights) vn -= p * std::log(p);
    CHECK(e.von_neumann == Approx(vn).epsilon(1e-12));
    for (std::size_t i = 0; i < orders.size(); ++i) {
        double sum = 0;
        for (double p : s.weights) sum += std::pow(p, orders[i]);
        CHECK(e.renyi[i] == Approx(std::log(sum) / (1 - orders[i])).epsilon(1e-12));
    }
    const std::array bad{1.0};
    CHECK_THROWS_AS(entropies(s, bad), DomainError);
    const std::array neg{-0.5};
    CHECK_THROWS_AS(entropies(s, neg), DomainError);
}

TEST_CASE("Mehler constraints round trip") {
    const ModeSet m = derive_modes(figure_model);
    const MehlerForm f = mehler_from_jastrow(m.D, m.omega_d);
    CHECK(f.Z == Approx(m.Z).epsilon(1e-14));
    CHECK(f.omega_w == Approx(m.omega_w).epsilon(1e-14));
    const JastrowForm j = jastrow_from_mehler(f.Z, f.omega_w);
    CHECK(j.D == Approx(m.D).epsilon(1e-13));
    CHECK(j.omega_d_plus_D == Approx(m.omega_d + m.D).epsilon(1e-13));
    CHECK(mehler_z(m.D, m.omega_d) == Approx(m.Z).epsilon(1e-14));
}

TEST_CASE("virial split") {
    const ModeSet m = derive_modes(figure_model);
    const VirialSplit v = virial_split(m);
    CHECK(v.kinetic == Approx(m.E0 / 2));
    CHECK(v.potential == Approx(m.E0 / 2));
}

TEST_CASE("grid") {
    const ModeSet m = derive_modes(figure_model);
    const GridSpec g = GridSpec::around(m);
    CHECK(g.n_points == 512);
    CHECK(g.x_max == Approx(8 / std::sqrt(2.0)));
    CHECK(g.spacing() == Approx((g.x_max - g.x_min) / 511));
    CHECK(g.point(511) == Approx(g.x_max));
    CHECK_THROWS_AS(validate(GridSpec{1, 0, 10}), DomainError);
    CHECK_THROWS_AS(validate(GridSpec{0, 1, 2}), DomainError);
}
