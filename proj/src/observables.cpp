#include "modelatom/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "modelatom/error.hpp"

namespace modelatom {

double mode_reflection(double Omega0, const Pulse& pulse, ReflectionRoute route,
                       const IntegrationControls& controls) {
    if (route == ReflectionRoute::analytic) return analytic_reflection(Omega0, pulse).R;
    return extract_reflection(integrate_mode(Omega0, pulse, controls)).R;
}

double energy_shift(double Omega0, double R) {
    if (!(R >= 0.0 && R < 1.0))
        throw DomainError("reflection coefficient must lie in [0, 1), got " + std::to_string(R));
    return Omega0 * R / (1.0 - R);
}

double mode_shift(double Omega0, const Pulse& pulse, ReflectionRoute route, const IntegrationControls& controls) {
    if (route == ReflectionRoute::analytic) return Omega0 * analytic_reflection_ratio(Omega0, pulse);
    return energy_shift(Omega0, mode_reflection(Omega0, pulse, route, controls));
}

double total_shift(const ModeSet& modes, const Pulse& pulse, ModelKind kind, ReflectionRoute route,
                   const IntegrationControls& controls) {
    check_admissible(pulse, modes);
    if (kind == ModelKind::exact)
        return mode_shift(modes.omega1, pulse, route, controls) + mode_shift(modes.omega2, pulse, route, controls);
    return 2.0 * mode_shift(model_frequency(modes, kind), pulse, route, controls);
}

double EnergyShiftReport::total(ModelKind kind) const {
    switch (kind) {
        case ModelKind::exact: return exact;
        case ModelKind::hf: return hf;
        case ModelKind::ks: return ks;
        case ModelKind::natural: return natural;
    }
    return exact;
}

EnergyShiftReport energy_shift_report(const ModeSet& modes, const Pulse& pulse, ReflectionRoute route,
                                      const IntegrationControls& controls) {
    check_admissible(pulse, modes);
    EnergyShiftReport r;
    r.modes = modes;
    r.pulse = pulse;
    r.shift_omega1 = mode_shift(modes.omega1, pulse, route, controls);
    r.shift_omega2 = mode_shift(modes.omega2, pulse, route, controls);
    r.exact = r.shift_omega1 + r.shift_omega2;
    r.hf = 2.0 * mode_shift(modes.omega_e, pulse, route, controls);
    r.ks = 2.0 * mode_shift(modes.omega_d, pulse, route, controls);
    r.natural = 2.0 * mode_shift(modes.omega_w, pulse, route, controls);
    return r;
}

double born_shift(double Omega0, const Pulse& pulse) {
    const double amp = pulse.coupling() * std::numbers::pi / (4.0 * pulse.beta * pulse.beta);
    const double s = std::sinh(0.5 * std::numbers::pi * Omega0 / pulse.beta);
    return amp * amp * Omega0 / (s * s);
}

SuddenShift sudden_shift(double Omega0, const Pulse& pulse) {
    const double b = pulse.beta;
    const double half_coupling = 0.5 * pulse.coupling();
    const double x = std::numbers::pi * Omega0 / (2.0 * b);
    SuddenShift out;
    out.value = Omega0 * half_coupling * half_coupling / (b * Omega0 * b * Omega0) * (1.0 - x * x / 3.0) *
                (1.0 - half_coupling / (b * b));
    out.valid = b >= 5.0 * std::max(Omega0, std::sqrt(std::abs(pulse.Lambda)) * pulse.omega0);
    return out;
}

double TransitionWeights::total() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s + tail_bound;
}

TransitionWeights transition_weights(double R, int n_max) {
    if (!(R >= 0.0 && R < 1.0))
        throw DomainError("reflection coefficient must lie in [0, 1), got " + std::to_string(R));
    if (n_max < 0)
        throw DomainError("n_max must be nonnegative");

    TransitionWeights tw;
    tw.R = R;
    tw.weights.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    tw.weights[0] = std::sqrt(1.0 - R);
    if (R > 0.0) {
        // log[Γ(n+1/2)/(√π Γ(n+1))] grows by log((n+1/2)/(n+1)) per step.
        const double log_base = 0.5 * std::log1p(-R);
        const double log_r = std::log(R);
        double log_ratio = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            log_ratio += std::log((n - 0.5) / n);
            tw.weights[static_cast<std::size_t>(n)] = std::exp(log_ratio + log_base + n * log_r);
        }
        tw.tail_bound = std::exp((n_max + 1) * log_r - 0.5 * std::log1p(-R));
    }
    return tw;
}

double statistical_shift(double Omega0, const TransitionWeights& tw) {
    double sum = 0.0;
    for (std::size_t n = 0; n < tw.weights.size(); ++n) sum += (2.0 * n + 0.5) * tw.weights[n];
    return Omega0 * (sum - 0.5);
}

double mode_overlap(double R) { return std::sqrt(1.0 - R); }

double overlap(const ModeSet& modes, const Pulse& pulse, OverlapKind kind, ReflectionRoute route,
               const IntegrationControls& controls) {
    check_admissible(pulse, modes);
    if (kind == OverlapKind::exact)
        return mode_overlap(mode_reflection(modes.omega1, pulse, route, controls)) *
               mode_overlap(mode_reflection(modes.omega2, pulse, route, controls));
    return 1.0 - mode_reflection(modes.omega_d, pulse, route, controls);
}

double abrupt_reflection(double Omega0, double Lambda, double omega0) {
    const double final2 = Omega0 * Omega0 + Lambda * omega0 * omega0;
    if (!(final2 > 0.0))
        throw IonizationRegime("final frequency squared " + std::to_string(final2) + " <= 0");
    const double wf = std::sqrt(final2);
    const double r = (Omega0 - wf) / (Omega0 + wf);
    return r * r;
}

double berry_connection(const Trajectory& traj, double t) {
    const double w0 = traj.mode_frequency();
    const ModeState s = traj.at(t);
    const double w2 = omega_squared(w0, traj.pulse(), t);
    const double b2 = s.B * s.B;
    return 0.25 * w0 * (w2 * b2 / (w0 * w0) + 1.0 / b2 + s.Bdot * s.Bdot / (w0 * w0));
}

}  // namespace modelatom
