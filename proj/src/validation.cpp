#include "modelatom/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "modelatom/collision.hpp"
#include "modelatom/observables.hpp"
#include "modelatom/one_matrix_dynamics.hpp"
#include "modelatom/reflection.hpp"
#include "modelatom/scenario.hpp"

namespace modelatom {

double spectral_oracle_error(const ModelParams& params, int grid_points, int k_check) {
    const ModeSet modes = derive_modes(params);
    const GridSpec grid = GridSpec::around(modes, grid_points);
    const double h = grid.spacing();
    const auto x = grid.points();
    const Eigen::Index n = grid_points;
    Eigen::MatrixXd kernel(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
            kernel(i, j) = kernel(j, i) = gamma1_static(modes, x[std::size_t(i)], x[std::size_t(j)]) * h;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues(); // ascending
    const OccupationSpectrum spec = occupation_spectrum(modes, k_check);
    double worst = 0;
    for (int k = 0; k <= k_check; ++k)
        worst = std::max(worst, std::abs(ev(n - 1 - k) - spec.weights[std::size_t(k)]));
    return worst;
}

namespace {

CheckResult within(std::string name, double value, double threshold, std::string detail = {}) {
    return {std::move(name), std::isfinite(value) && value <= threshold, value, threshold, std::move(detail)};
}

const ModelParams kFigureModel{3.0, 0.375};
constexpr double kLambda = 2.0 / 9.0;

CheckResult ordering() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> om(0.1, 10.0), la(1e-6, 0.5 - 1e-6);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const ModeSet m = derive_modes({om(rng), la(rng)});
        if (!(m.omega2 < m.omega_d && m.omega_d < m.omega_w && m.omega_w < m.omega_e && m.omega_e < m.omega1))
            ++violations;
    }
    return within("frequency ordering", violations, 0, "1000 random (omega0, lambda)");
}

CheckResult virial() {
    const ModeSet m = derive_modes(kFigureModel);
    const VirialSplit v = virial_split(m);
    // Potential energy by direct quadrature of the exact ground state.
    const GridSpec g{-8 / std::sqrt(m.omega2), 8 / std::sqrt(m.omega2), 301};
    const double h = g.spacing();
    const double w0 = m.omega1 * m.omega1, lam = kFigureModel.lambda;
    double pot = 0;
    for (double x1 : g.points())
        for (double x2 : g.points()) {
            const double psi = model_wavefunction(ModelKind::exact, m, x1, x2);
            pot += psi * psi * 0.5 * w0 * (x1 * x1 + x2 * x2 - lam * (x1 - x2) * (x1 - x2));
        }
    pot *= h * h;
    const double err = std::max({std::abs(pot - m.E0 / 2), std::abs(v.kinetic - m.E0 / 2),
                                 std::abs(v.potential - m.E0 / 2)});
    return within("virial split", err, 1e-10, "kinetic = potential = E0/2");
}

CheckResult spectral() {
    double worst = 0;
    for (double lam : {0.1, 0.375, 0.45}) worst = std::max(worst, spectral_oracle_error({3.0, lam}, 400, 10));
    return within("spectral oracle", worst, 1e-6, "k <= 10, lambda in {0.1, 3/8, 0.45}");
}

CheckResult trace_identity() {
    const ModeSet m = derive_modes(kFigureModel);
    const OccupationSpectrum s = occupation_spectrum(m, 200);
    double sum = 0;
    for (double p : s.weights) sum += p * p;
    return within("trace identity", std::abs(sum - m.omega_d / m.omega_w), 1e-10);
}

CheckResult mehler_closure() {
    double worst = 0;
    for (double lam : {0.05, 0.2, 0.375, 0.49}) {
        const ModeSet m = derive_modes({3.0, lam});
        const MehlerForm f = mehler_from_jastrow(m.D, m.omega_d);
        const JastrowForm j = jastrow_from_mehler(f.Z, f.omega_w);
        worst = std::max({worst, std::abs(j.omega_d_plus_D - (m.omega_d + m.D)) / (m.omega_d + m.D),
                          std::abs(j.D - m.D) / m.D});
    }
    return within("Mehler closure", worst, 1e-12);
}

CheckResult wronskian(const Trajectory& traj) {
    const double W0 = traj.mode_frequency();
    double worst = 0;
    for (const ModeState& s : traj.nodes())
        worst = std::max(worst, std::abs(std::imag(std::conj(s.xi) * s.dxi) - W0) / W0);
    return within("Wronskian", worst, 1e-7, "Im(conj(xi) xi') = Omega0 at every node");
}

CheckResult ermakov(const Trajectory& traj) {
    double worst = 0;
    const double h = 5e-3;
    const double lo = traj.t_start() + 3 * h, hi = traj.t_end() - 3 * h;
    for (int i = 0; i <= 200; ++i) {
        const double t = lo + (hi - lo) * i / 200;
        worst = std::max(worst, std::abs(ermakov_residual(traj, t, h)));
    }
    return within("Ermakov residual", worst / traj.mode_frequency(), 1e-6);
}

CheckResult translation(const IntegrationControls& controls) {
    const ModeSet m = derive_modes(kFigureModel);
    Pulse p = make_pulse(kFigureModel, kLambda, 3.0);
    const double R0 = extract_reflection(integrate_mode(m.omega2, p, controls)).R;
    p.center = 2.75;
    const double R1 = extract_reflection(integrate_mode(m.omega2, p, controls)).R;
    return within("translation invariance", std::abs(R1 - R0), 1e-9, "pulse center shifted by 2.75");
}

CheckResult zeros(const IntegrationControls& controls) {
    const ModeSet m = derive_modes(kFigureModel);
    double worst = 0;
    for (int n : {1, 2}) {
        const double c = kLambda * m.omega1 * m.omega1;
        const double beta = std::sqrt(c / ((2.0 * n + 1) * (2.0 * n + 1) - 1));
        const Pulse p = make_pulse(kFigureModel, kLambda, beta);
        worst = std::max(worst, extract_reflection(integrate_mode(m.omega1, p, controls)).R);
    }
    return within("reflection zeros", worst, 1e-8, "(2n+1)^2 = 1 + Lambda omega0^2/beta^2, n = 1, 2");
}

std::vector<CheckResult> one_matrix_checks(const IntegrationControls& controls) {
    const ModeSet m = derive_modes(kFigureModel);
    const OneMatrixSeries series(m, make_pulse(kFigureModel, kLambda, 3.0), controls);
    const double lo = series.t_start(), hi = series.t_end();
    double min_D = INFINITY, worst_norm = 0;
    for (int i = 0; i <= 400; ++i) {
        const OneMatrixSnapshot s = series.snapshot(lo + (hi - lo) * i / 400);
        min_D = std::min(min_D, s.D_t);
        const OccupationSpectrum occ = occupation_spectrum_from_z(s.Z_t, 60);
        worst_norm = std::max(worst_norm, std::abs(occ.total() - 1.0));
    }
    const double z0 = series.snapshot(lo).Z_t;
    return {
        within("D(t) nonnegative", std::max(0.0, -min_D), 0.0, "401 snapshots"),
        within("Z(t_start) static", std::abs(z0 - m.Z), 1e-9),
        within("P_k[Z(t)] normalized", worst_norm, 1e-12),
    };
}

CheckResult interpretations() {
    double worst = 0;
    for (double R : {0.01, 0.3, 0.8}) {
        const TransitionWeights w = transition_weights(R, 200);
        worst = std::max(worst, std::abs(statistical_shift(1.0, w) - energy_shift(1.0, R)) / energy_shift(1.0, R));
    }
    return within("statistical = expectation shift", worst, 1e-10, "R in {0.01, 0.3, 0.8}");
}

// |<phi0|phi(t_end)>|² by quadrature over the evolved mode state.
double quadrature_overlap(const Trajectory& traj) {
    const double W0 = traj.mode_frequency();
    const ModeState a = traj.at(traj.t_start()), b = traj.at(traj.t_end());
    const double L = 12 / std::sqrt(W0);
    const int n = 2001;
    const double h = 2 * L / (n - 1);
    std::complex<double> sum = 0;
    for (int i = 0; i < n; ++i) {
        const double X = -L + h * i;
        sum += std::conj(mode_state(W0, a, X)) * mode_state(W0, b, X);
    }
    return std::norm(sum * h);
}

CheckResult overlap_factorization(const IntegrationControls& controls) {
    const ModeSet m = derive_modes(kFigureModel);
    const Pulse p = make_pulse(kFigureModel, kLambda, 3.0);
    const double independent = quadrature_overlap(integrate_mode(m.omega1, p, controls)) *
                               quadrature_overlap(integrate_mode(m.omega2, p, controls));
    return within("overlap factorization", std::abs(independent - overlap(m, p, OverlapKind::exact)), 1e-8);
}

std::vector<CheckResult> berry(const IntegrationControls& controls) {
    const ModeSet m = derive_modes(kFigureModel);
    const Pulse p = make_pulse(kFigureModel, kLambda, 3.0);
    const Trajectory traj = integrate_mode(m.omega2, p, controls);
    const double W0 = m.omega2;
    const double R = analytic_reflection(W0, p).R;
    return {
        within("Berry connection at start", std::abs(berry_connection(traj, traj.t_start()) - W0 / 2), 1e-10),
        within("Berry connection at end",
               std::abs(berry_connection(traj, traj.t_end()) - (energy_shift(W0, R) + W0 / 2)), 1e-6),
    };
}

CheckResult sudden_sign() {
    const ModeSet m = derive_modes(kFigureModel);
    int violations = 0;
    for (double beta : {15.0, 30.0, 100.0, 300.0}) {
        const Pulse up = make_pulse(kFigureModel, kLambda, beta);
        const Pulse down = make_pulse(kFigureModel, -kLambda, beta);
        if (!(total_shift(m, down, ModelKind::exact) > total_shift(m, up, ModelKind::exact))) ++violations;
    }
    return within("sudden-regime sign effect", violations, 0, "beta >= 5 omega0");
}

CheckResult limits() {
    const ModeSet m = derive_modes(kFigureModel);
    double worst = 0;
    for (double L : {kLambda, -kLambda}) {
        const double peak = total_shift(m, make_pulse(kFigureModel, L, 3.0), ModelKind::exact);
        for (double beta : {1e-2, 1e3})
            worst = std::max(worst, total_shift(m, make_pulse(kFigureModel, L, beta), ModelKind::exact) / peak);
    }
    return within("adiabatic and sudden limits", worst, 1e-3, "shift at beta 1e-2 and 1e3 relative to beta 3");
}

CheckResult figure3_sign() {
    const ModeSet m = derive_modes(kFigureModel);
    const auto rows = sign_effect_ratio(m, kLambda, linear_grid(4.0, 12.0, 81));
    double lowest = INFINITY;
    for (const auto& r : rows) lowest = std::min(lowest, r.ratio);
    return within("sign asymmetry for beta = v >= 4", std::max(0.0, -lowest), 0.0);
}

CheckResult collision_band() {
    double lo = INFINITY, hi = -INFINITY;
    for (double v : log_grid(0.5, 50.0, 60)) {
        CollisionParams cp;
        cp.v = v;
        const double E = cp.kinetic_energy();
        const double scale = cp.r0 / v * E / (E + cp.Z1 * cp.Z2 / cp.r0);
        const double a = collision_time_exact(cp) / scale;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    const double excess = std::max(0.0, std::max(2.0 - lo, hi - 4.0));
    return within("collision time alpha band", excess, 0.0,
                  "exact/(r0/v E/(E+Z1Z2/r0)) in [" + format_number(lo) + ", " + format_number(hi) + "]");
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const IntegrationControls& controls) {
    std::vector<CheckResult> out{ordering(), virial(), spectral(), trace_identity(), mehler_closure()};

    const ModeSet m = derive_modes(kFigureModel);
    const Trajectory traj = integrate_mode(m.omega1, make_pulse(kFigureModel, kLambda, 3.0), controls);
    out.push_back(wronskian(traj));
    out.push_back(ermakov(traj));
    out.push_back(translation(controls));
    out.push_back(zeros(controls));
    for (auto& c : one_matrix_checks(controls)) out.push_back(std::move(c));
    out.push_back(interpretations());
    out.push_back(overlap_factorization(controls));
    for (auto& c : berry(controls)) out.push_back(std::move(c));
    out.push_back(sudden_sign());
    out.push_back(limits());
    out.push_back(figure3_sign());
    out.push_back(collision_band());
    return out;
}

}  // namespace modelatom
