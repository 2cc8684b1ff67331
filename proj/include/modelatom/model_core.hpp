#pragma once

// Static ground state of the two-particle harmonic model atom
//
//   H = -1/2 (d²/dx1² + d²/dx2²) + 1/2 ω0² (x1² + x2²) - 1/2 λ ω0² (x1 - x2)²
//
// and the three independent-particle products built from it.

#include <span>
#include <string_view>
#include <vector>

namespace modelatom {

struct ModelParams {
    double omega0 = 3.0;   ///< confinement frequency, > 0
    double lambda = 0.375; ///< interaction strength, in [0, 0.5)
};

/// Throws DomainError unless omega0 > 0 and 0 <= lambda < 0.5.
void validate(const ModelParams& params);

/// Every frequency and constant derived from one ModelParams.
struct ModeSet {
    double omega1 = 0;  ///< center-of-mass mode (= ω0)
    double omega2 = 0;  ///< relative mode ω0·sqrt(1-2λ)
    double omega_e = 0; ///< energy-optimal (Hartree-Fock) frequency
    double omega_d = 0; ///< density-optimal (Kohn-Sham) frequency, harmonic mean of the modes
    double omega_w = 0; ///< natural-orbital frequency, geometric mean of the modes
    double D = 0;       ///< Jastrow exponent coefficient
    double Z = 0;       ///< Mehler parameter; occupations are (1-Z)Z^k
    double E0 = 0;      ///< exact ground-state energy
    double C1 = 0;      ///< Kohn-Sham energy constant E0/2 - ω_d/2

    double omega0() const { return omega1; }
};

ModeSet derive_modes(const ModelParams& params);

/// Which two-particle ground state to evaluate.
enum class ModelKind { exact, hf, ks, natural };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Orbital frequency of an independent-particle kind (ω_e, ω_d, ω_w).
/// Throws DomainError for ModelKind::exact, which has two mode frequencies.
double model_frequency(const ModeSet& modes, ModelKind kind);

// -- one-matrix -------------------------------------------------------------

/// Γ1(x1,x2) = φ_d(x1) φ_d(x2) exp(-D (x1-x2)²/2).
double gamma1_static(const ModeSet& modes, double x1, double x2);

/// Tr Γ1² = (1 + 2D/ω_d)^(-1/2).
double static_purity(const ModeSet& modes);

/// Z from the Jastrow pair (D, ω_d). Used for both the static and the
/// time-dependent one-matrix.
double mehler_z(double D, double omega_d);

struct MehlerForm {
    double Z = 0;
    double omega_w = 0;
};

/// Solve the two exponent-matching constraints for (Z, ω_w).
MehlerForm mehler_from_jastrow(double D, double omega_d);

struct JastrowForm {
    double omega_d_plus_D = 0;
    double D = 0;
};

/// Forward direction of the constraints:
/// ω_d + D = ω_w (1+Z²)/(1-Z²),  D = ω_w 2Z/(1-Z²).
JastrowForm jastrow_from_mehler(double Z, double omega_w);

// -- occupation numbers -----------------------------------------------------

struct OccupationSpectrum {
    double Z = 0;
    std::vector<double> weights; ///< P_k = (1-Z) Z^k, k = 0..k_max
    int k_max = 0;
    double tail_mass = 0;        ///< Z^(k_max+1), the mass of all k > k_max

    double total() const; ///< Σ weights + tail_mass
};

OccupationSpectrum occupation_spectrum(const ModeSet& modes, int k_max);
OccupationSpectrum occupation_spectrum_from_z(double Z, int k_max);

/// Escort transform P_k(Z) -> P_k(Z^q).
OccupationSpectrum escort(const OccupationSpectrum& spectrum, double q);

struct Entropies {
    double von_neumann = 0;
    std::vector<double> renyi; ///< one per requested order, same order
};

/// Natural-log entropies in closed geometric form.
/// Throws DomainError for an order q <= 0 or q == 1, or an unnormalized spectrum.
Entropies entropies(const OccupationSpectrum& spectrum, std::span<const double> renyi_orders);

// -- orbitals and wave functions ---------------------------------------------

/// Largest Hermite order accepted by hermite_function / natural_orbital.
inline constexpr int kMaxHermiteOrder = 1000;

/// Orthonormal oscillator eigenfunction φ_k(ω, x). Evaluated with the
/// normalized three-term recurrence and running rescaling, so neither the
/// polynomial nor the Gaussian seed overflows or underflows prematurely for
/// k <= kMaxHermiteOrder. Throws DomainError outside 0 <= k <= kMaxHermiteOrder.
double hermite_function(double omega, int k, double x);

/// φ_k(ω_w, x), the k-th natural orbital.
double natural_orbital(const ModeSet& modes, int k, double x);

/// Ground-state Gaussian (ω/π)^(1/4) exp(-ω x²/2).
double gaussian_orbital(double omega, double x);

/// Exact Ψ(X1(x1,x2), X2(x1,x2)) or one of the three Gaussian products.
double model_wavefunction(ModelKind kind, const ModeSet& modes, double x1, double x2);

struct VirialSplit {
    double kinetic = 0;
    double potential = 0;
};

/// Kinetic and potential parts of E0, each (ω1+ω2)/4.
VirialSplit virial_split(const ModeSet& modes);

// -- grids -----------------------------------------------------------------

struct GridSpec {
    double x_min = -1;
    double x_max = 1;
    int n_points = 3;

    double spacing() const;
    double point(int i) const;
    std::vector<double> points() const;

    /// [-8σ, 8σ] with σ = 1/sqrt(ω_d).
    static GridSpec around(const ModeSet& modes, int n_points = 512);
};

/// Throws DomainError unless x_min < x_max and n_points >= 3.
void validate(const GridSpec& grid);

}  // namespace modelatom
