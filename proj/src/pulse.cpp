#include "modelatom/pulse.hpp"

#include <cmath>
#include <string>

#include "modelatom/error.hpp"

namespace modelatom {

std::string_view to_string(PulseShape shape) {
    switch (shape) {
        case PulseShape::sech2: return "sech2";
    }
    return "?";
}

PulseShape parse_pulse_shape(std::string_view name) {
    if (name == "sech2") return PulseShape::sech2;
    throw DomainError("unknown pulse shape '" + std::string(name) + "'");
}

namespace {

// sech(u) without overflow in cosh.
double sech(double u) {
    const double e = std::exp(-std::abs(u));
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double Pulse::envelope(double t) const {
    const double s = sech(2.0 * beta * (t - center));
    return s * s;
}

double Pulse::envelope_rate(double t) const {
    const double u = 2.0 * beta * (t - center);
    const double s = sech(u);
    return -4.0 * beta * s * s * std::tanh(u);
}

void check_admissible(const Pulse& pulse, const ModeSet& modes) {
    if (!(pulse.beta > 0.0) || !std::isfinite(pulse.beta))
        throw DomainError("pulse beta must be positive, got " + std::to_string(pulse.beta));
    if (!std::isfinite(pulse.Lambda))
        throw DomainError("pulse Lambda must be finite");
    const double limit = (modes.omega2 / modes.omega1) * (modes.omega2 / modes.omega1);
    if (!(std::abs(pulse.Lambda) < limit))
        throw IonizationRegime("|Lambda| = " + std::to_string(std::abs(pulse.Lambda)) +
                               " must stay below 1 - 2*lambda = " + std::to_string(limit) +
                               " (ionization-like regime)");
}

Pulse make_pulse(const ModelParams& params, double Lambda, double beta, PulseShape shape) {
    Pulse p{Lambda, beta, shape, params.omega0, 0.0};
    check_admissible(p, derive_modes(params));
    return p;
}

double omega_squared(double Omega0, const Pulse& pulse, double t) {
    const double w2 = Omega0 * Omega0 + pulse.coupling() * pulse.envelope(t);
    if (!(w2 > 0.0))
        throw IonizationRegime("Omega^2(t) = " + std::to_string(w2) + " <= 0 at t = " +
                               std::to_string(t) + " (ionization-like regime)");
    return w2;
}

double pulse_support(const Pulse& pulse, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw DomainError("pulse support threshold must lie in (0, 1)");
    return std::acosh(1.0 / std::sqrt(threshold)) / (2.0 * pulse.beta);
}

}  // namespace modelatom
