#include <cmath>
#include <string>

#include "modelatom/error.hpp"
#include "modelatom/model_core.hpp"

namespace modelatom {

double gamma1_static(const ModeSet& modes, double x1, double x2) {
    const double d = x1 - x2;
    return gaussian_orbital(modes.omega_d, x1) * gaussian_orbital(modes.omega_d, x2) *
           std::exp(-0.5 * modes.D * d * d);
}

double static_purity(const ModeSet& modes) {
    return 1.0 / std::sqrt(1.0 + 2.0 * modes.D / modes.omega_d);
}

double mehler_z(double D, double omega_d) {
    const double s = std::sqrt(1.0 + 2.0 * D / omega_d);
    // (s-1)/(s+1) loses digits for tiny D; s-1 = (2D/ω_d)/(s+1).
    const double s_minus_1 = (2.0 * D / omega_d) / (s + 1.0);
    return s_minus_1 / (s + 1.0);
}

MehlerForm mehler_from_jastrow(double D, double omega_d) {
    return {mehler_z(D, omega_d), omega_d * std::sqrt(1.0 + 2.0 * D / omega_d)};
}

JastrowForm jastrow_from_mehler(double Z, double omega_w) {
    const double denom = 1.0 - Z * Z;
    return {omega_w * (1.0 + Z * Z) / denom, omega_w * 2.0 * Z / denom};
}

double OccupationSpectrum::total() const {
    double sum = 0.0;
    for (double w : weights) sum += w;
    return sum + tail_mass;
}

OccupationSpectrum occupation_spectrum_from_z(double Z, int k_max) {
    if (!(Z >= 0.0 && Z < 1.0))
        throw DomainError("Mehler parameter Z must lie in [0, 1), got " + std::to_string(Z));
    if (k_max < 0)
        throw DomainError("k_max must be nonnegative");

    OccupationSpectrum spec;
    spec.Z = Z;
    spec.k_max = k_max;
    spec.weights.resize(static_cast<std::size_t>(k_max) + 1);
    double zk = 1.0;
    for (auto& w : spec.weights) {
        w = (1.0 - Z) * zk;
        zk *= Z;
    }
    spec.tail_mass = zk;
    return spec;
}

OccupationSpectrum occupation_spectrum(const ModeSet& modes, int k_max) {
    return occupation_spectrum_from_z(modes.Z, k_max);
}

OccupationSpectrum escort(const OccupationSpectrum& spectrum, double q) {
    if (!(q > 0.0))
        throw DomainError("escort order must be positive");
    return occupation_spectrum_from_z(std::pow(spectrum.Z, q), spectrum.k_max);
}

Entropies entropies(const OccupationSpectrum& spectrum, std::span<const double> renyi_orders) {
    if (std::abs(spectrum.total() - 1.0) > 1e-12)
        throw DomainError("occupation spectrum is not normalized");

    const double Z = spectrum.Z;
    Entropies out;
    // -Σ P ln P for P_k = (1-Z)Z^k sums to -ln(1-Z) - Z ln Z/(1-Z).
    out.von_neumann = Z > 0.0 ? -std::log1p(-Z) - Z * std::log(Z) / (1.0 - Z) : 0.0;

    out.renyi.reserve(renyi_orders.size());
    for (double q : renyi_orders) {
        if (!(q > 0.0))
            throw DomainError("Renyi order must be positive, got " + std::to_string(q));
        if (q == 1.0)
            throw DomainError("Renyi order 1 is the von Neumann entropy");
        // Σ P^q = (1-Z)^q / (1-Z^q)
        const double zq = std::pow(Z, q);
        const double log_sum = q * std::log1p(-Z) - std::log1p(-zq);
        out.renyi.push_back(log_sum / (1.0 - q));
    }
    return out;
}

}  // namespace modelatom
