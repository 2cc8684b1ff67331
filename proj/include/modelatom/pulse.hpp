#pragma once

#include <string_view>

#include "modelatom/model_core.hpp"

namespace modelatom {

enum class PulseShape { sech2 };

std::string_view to_string(PulseShape shape);
PulseShape parse_pulse_shape(std::string_view name);

/// Confinement pulse H'(t) = 1/2 ω0² Λ F(t) (x1² + x2²).
struct Pulse {
    double Lambda = 0;               ///< signed strength
    double beta = 1;                 ///< inverse transition time, > 0
    PulseShape shape = PulseShape::sech2;
    double omega0 = 3;               ///< sets the coupling scale Λω0²
    double center = 0;               ///< time of the pulse maximum

    /// F(t) with F(center) = 1 and F(±∞) = 0.
    double envelope(double t) const;
    /// dF/dt.
    double envelope_rate(double t) const;
    /// Λω0².
    double coupling() const { return Lambda * omega0 * omega0; }
};

/// Builds a pulse for a model and checks |Λ| < 1 - 2λ.
Pulse make_pulse(const ModelParams& params, double Lambda, double beta,
                 PulseShape shape = PulseShape::sech2);

/// Throws IonizationRegime when |Λ| >= (ω2/ω1)² = 1 - 2λ, DomainError for β <= 0.
void check_admissible(const Pulse& pulse, const ModeSet& modes);

/// Ω²(t) = Ω0² + Λω0² F(t). Throws IonizationRegime when the result is <= 0.
double omega_squared(double Omega0, const Pulse& pulse, double t);

/// Smallest |t - center| beyond which F(t) < threshold.
double pulse_support(const Pulse& pulse, double threshold);

}  // namespace modelatom
