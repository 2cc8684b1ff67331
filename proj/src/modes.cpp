#include "modelatom/model_core.hpp"

#include <cmath>
#include <string>

#include "modelatom/error.hpp"

namespace modelatom {

void validate(const ModelParams& params) {
    if (!(params.omega0 > 0.0) || !std::isfinite(params.omega0))
        throw DomainError("omega0 must be a positive finite number, got " +
                          std::to_string(params.omega0));
    // λ = 0.5 makes ω2 = 0: the relative mode is unbound.
    if (!(params.lambda >= 0.0 && params.lambda < 0.5))
        throw DomainError("lambda must lie in [0, 0.5), got " + std::to_string(params.lambda) +
                          " (unbound system)");
}

ModeSet derive_modes(const ModelParams& params) {
    validate(params);
    const double w0 = params.omega0;
    const double lam = params.lambda;

    ModeSet m;
    m.omega1 = w0;
    m.omega2 = w0 * std::sqrt(1.0 - 2.0 * lam);
    m.omega_e = w0 * std::sqrt(1.0 - lam);
    m.omega_d = 2.0 * m.omega1 * m.omega2 / (m.omega1 + m.omega2);
    m.omega_w = std::sqrt(m.omega1 * m.omega2);

    const double diff = m.omega1 - m.omega2;
    const double sum = m.omega1 + m.omega2;
    m.D = 0.25 * diff * diff / sum;

    const double s1 = std::sqrt(m.omega1);
    const double s2 = std::sqrt(m.omega2);
    const double zr = (s1 - s2) / (s1 + s2);
    m.Z = zr * zr;

    m.E0 = 0.5 * sum;
    m.C1 = 0.25 * diff * diff / sum;
    return m;
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::exact: return "exact";
        case ModelKind::hf: return "hf";
        case ModelKind::ks: return "ks";
        case ModelKind::natural: return "natural";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "exact") return ModelKind::exact;
    if (name == "hf") return ModelKind::hf;
    if (name == "ks") return ModelKind::ks;
    if (name == "natural") return ModelKind::natural;
    throw DomainError("unknown model kind '" + std::string(name) + "'");
}

double model_frequency(const ModeSet& modes, ModelKind kind) {
    switch (kind) {
        case ModelKind::hf: return modes.omega_e;
        case ModelKind::ks: return modes.omega_d;
        case ModelKind::natural: return modes.omega_w;
        case ModelKind::exact: break;
    }
    throw DomainError("the exact state has two mode frequencies, not one orbital frequency");
}

VirialSplit virial_split(const ModeSet& modes) {
    const double quarter = 0.25 * (modes.omega1 + modes.omega2);
    return {quarter, quarter};
}

double GridSpec::spacing() const { return (x_max - x_min) / (n_points - 1); }

double GridSpec::point(int i) const { return x_min + i * spacing(); }

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) xs[static_cast<std::size_t>(i)] = point(i);
    return xs;
}

GridSpec GridSpec::around(const ModeSet& modes, int n_points) {
    const double half = 8.0 / std::sqrt(modes.omega_d);
    GridSpec g{-half, half, n_points};
    validate(g);
    return g;
}

void validate(const GridSpec& grid) {
    if (!(grid.x_min < grid.x_max))
        throw DomainError("grid requires x_min < x_max");
    if (grid.n_points < 3)
        throw DomainError("grid requires at least 3 points");
}

}  // namespace modelatom
