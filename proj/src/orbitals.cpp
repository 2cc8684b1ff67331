#include <cmath>
#include <numbers>
#include <string>

#include "modelatom/error.hpp"
#include "modelatom/model_core.hpp"

namespace modelatom {

double gaussian_orbital(double omega, double x) {
    return std::pow(omega / std::numbers::pi, 0.25) * std::exp(-0.5 * omega * x * x);
}

double hermite_function(double omega, int k, double x) {
    if (k < 0 || k > kMaxHermiteOrder)
        throw DomainError("Hermite order " + std::to_string(k) + " outside [0, " +
                          std::to_string(kMaxHermiteOrder) + "]");
    const double y = std::sqrt(omega) * x;

    // Normalized recurrence with the Gaussian factored out:
    //   ψ_{n+1} = sqrt(2/(n+1)) y ψ_n - sqrt(n/(n+1)) ψ_{n-1}
    // The running values are kept near unity and the scale is tracked in log form.
    double prev = 0.0;
    double cur = 1.0;
    double log_scale = 0.0;
    for (int n = 0; n < k; ++n) {
        const double next = std::sqrt(2.0 / (n + 1)) * y * cur - std::sqrt(double(n) / (n + 1)) * prev;
        prev = cur;
        cur = next;
        const double mag = std::abs(cur);
        if (mag > 1e100) {
            prev /= mag;
            cur /= mag;
            log_scale += std::log(mag);
        }
    }
    const double log_norm = 0.25 * std::log(omega / std::numbers::pi) - 0.5 * y * y + log_scale;
    return cur * std::exp(log_norm);
}

double natural_orbital(const ModeSet& modes, int k, double x) {
    return hermite_function(modes.omega_w, k, x);
}

double model_wavefunction(ModelKind kind, const ModeSet& modes, double x1, double x2) {
    if (kind == ModelKind::exact) {
        const double X1 = (x1 + x2) / std::numbers::sqrt2;
        const double X2 = (x1 - x2) / std::numbers::sqrt2;
        return gaussian_orbital(modes.omega1, X1) * gaussian_orbital(modes.omega2, X2);
    }
    const double w = model_frequency(modes, kind);
    return gaussian_orbital(w, x1) * gaussian_orbital(w, x2);
}

}  // namespace modelatom
