#pragma once

#include "sw2d/params.hpp"
#include "sw2d/field2d.hpp"
#include "sw2d/spectral.hpp"

#include <array>
#include <cstddef>
#include <functional>

namespace sw2d {

/// Which set of shear variables a state stores: the interface momentum shear
/// gamma (raw) or its layer-averaged, well-posed counterpart (regularized).
enum class Representation { raw, regularized };

/// @brief Evolution state of the two-layer Boussinesq system.
///
/// gamma = (gamma1, gamma2) is curl-free (max |curl| <= 1e-8 expected of any
/// valid state; enforced at run entry points, reported by invariants()).
/// sigma = gamma2 and tau = -gamma1 are the underlying vorticity-sheet
/// variables used by the Hamiltonian formalism.
struct KBKState {
    Field2D zeta;
    Field2D gamma1;
    Field2D gamma2;
    double time = 0.0;
    Representation representation = Representation::raw;
};

/// @brief Time derivative of the three state fields.
struct StateDeriv {
    Field2D zeta;
    Field2D gamma1;
    Field2D gamma2;
};

/// @brief Variational derivatives of the Hamiltonian with respect to
///        (zeta, sigma, tau).
struct VariationalDerivatives {
    Field2D dzeta;
    Field2D dsigma;
    Field2D dtau;
};

/// @brief Conserved-quantity snapshot. gx, gy are the components of the
///        shear flux (integral of gamma); Lrot uses box-centered coordinates
///        and is meaningful only for decaying data.
struct InvariantReport {
    double H = 0.0;
    double mass = 0.0;
    double gx = 0.0;
    double gy = 0.0;
    double M1 = 0.0;
    double M2 = 0.0;
    double Lrot = 0.0;
    double curl_norm = 0.0;
};

/// @brief Time-stepping parameters.
struct SolverConfig {
    double dt = 0.0;        ///< 0 selects dt_factor * RK4 stability bound
    double dt_factor = 0.5; ///< used when dt == 0
    double t_end = 10.0;
    bool dealias = true;
    Representation representation = Representation::regularized;
    std::size_t snapshot_every = 0;   ///< steps between snapshot hooks; 0 = off
    std::size_t invariant_every = 10; ///< steps between invariant hooks; 0 = off
    /// Raw representation only: project every RHS onto the well-posed band
    /// |k| <= illposed_cutoff (Galerkin truncation). When false, a growth
    /// guard aborts once energy beyond the cutoff grows by guard_factor.
    bool filter_raw_band = true;
    double guard_factor = 10.0;
};

/// @brief Linearization result at wavevector k about a uniform shear gamma0.
///
/// Raw branch: (omega - alpha*B*k.gamma0)^2 = gprime |k|^2 (A - (eps^2/3) kappa |k|^2);
/// beyond |k|^2 = 3A/(eps^2 kappa) the right side is negative, the frequencies
/// turn complex (illposed = true) and growth_rate carries the imaginary part.
/// Regularized branch: (omega - alpha*B*k.gamma0)^2
///   = gprime*A*|k|^2 / (1 + (eps^2/3)(kappa/A)|k|^2), well-posed for all k.
struct DispersionResult {
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    bool illposed = false;
    double growth_rate = 0.0;
};

DispersionResult dispersion(const std::array<double, 2>& k,
                            const std::array<double, 2>& gamma0,
                            const ModelCoefficients& coeffs, bool regularized);

/// @brief Wavenumber magnitude at which the raw linearization loses
///        well-posedness: sqrt(3A/(eps^2 kappa)).
double illposed_cutoff(const ModelCoefficients& coeffs);

/// @brief RK4 stability step bound 2.5/max|omega| for the given grid; the raw
///        bound is taken over the well-posed band only.
double stability_dt(const ModelCoefficients& coeffs, const Grid2D& grid,
                    Representation repr);

// --- Hamiltonian structure (raw representation) ----------------------------

/// dH/dzeta = gprime*zeta + (alpha/2) B (sigma^2 + tau^2)
/// dH/dsigma = A*sigma + alpha*B*zeta*sigma + (eps^2/3) kappa * Lap(sigma)
/// dH/dtau analogous. Products are dealiased when dealias = true.
VariationalDerivatives variational_derivatives(const KBKState& state,
                                               const ModelCoefficients& coeffs,
                                               const Spectral& sp, bool dealias = true);

/// @brief Darboux Poisson tensor applied to variational derivatives:
///        zeta_t = -dy(dsigma) + dx(dtau), sigma_t = -dy(dzeta),
///        tau_t = dx(dzeta), returned as derivatives of (zeta, gamma1, gamma2).
StateDeriv apply_poisson(const VariationalDerivatives& vd, const Spectral& sp);

/// @brief Right-hand side of the raw system:
///        zeta_t = -div(A*gamma + alpha*B*zeta*gamma + (eps^2/3) kappa Lap(gamma)),
///        gamma_t = -grad(gprime*zeta + (alpha/2) B |gamma|^2).
StateDeriv rhs_raw(const KBKState& state, const ModelCoefficients& coeffs,
                   const Spectral& sp, bool dealias = true);

/// @brief Right-hand side of the regularized system:
///        zeta_t = -div(A*gamma + alpha*B*zeta*gamma),
///        gamma_t = (1 - c Lap)^{-1} (-grad(gprime*zeta + (alpha/2) B |gamma|^2)),
///        c = eps^2 kappa/(3A). State must be in regularized representation.
StateDeriv rhs_regularized(const KBKState& state, const ModelCoefficients& coeffs,
                           const Spectral& sp, bool dealias = true);

/// @brief Near-identity change of shear variables, spectral multiplier
///        1 - c|k|^2 with c = eps^2 kappa/(3A) (zeta is untouched).
///
/// from_regularized applies the asymptotic inverse, multiplier 1 + c|k|^2
/// (round trip is 1 - c^2|k|^4, an O(eps^4) defect). If diag is non-null it
/// receives the fraction of shear energy beyond half the multiplier's zero
/// crossing 1/sqrt(c); warn is set when that fraction exceeds 1e-12, where the
/// near-identity map stops being contraction-like.
struct ConversionDiagnostics {
    double tail_fraction = 0.0;
    bool warn = false;
};
KBKState to_regularized(const KBKState& state, const ModelCoefficients& coeffs,
                        const Spectral& sp, ConversionDiagnostics* diag = nullptr);
KBKState from_regularized(const KBKState& state, const ModelCoefficients& coeffs,
                          const Spectral& sp, ConversionDiagnostics* diag = nullptr);

/// @brief Energy functional
///        H = 1/2 ∫ (A + alpha*B*zeta)|gamma|^2
///              + (eps^2/3) kappa (gamma . Lap gamma) + gprime zeta^2.
/// Regularized states are converted to raw variables first.
double hamiltonian(const KBKState& state, const ModelCoefficients& coeffs,
                   const Spectral& sp);

/// @brief All conserved diagnostics (H, mass, shear flux, momenta M1/M2,
///        angular momentum, curl norm), computed on raw variables.
InvariantReport invariants(const KBKState& state, const ModelCoefficients& coeffs,
                           const Spectral& sp);

// --- time stepping ----------------------------------------------------------

/// @brief One classical RK4 step of size dt (advances state.time).
KBKState step(const KBKState& state, double dt, const ModelCoefficients& coeffs,
              const Spectral& sp, const SolverConfig& cfg);

/// @brief Optional per-stride callbacks for evolve.
struct EvolveHooks {
    std::function<void(const KBKState&, const InvariantReport&)> on_invariant;
    std::function<void(const KBKState&, std::size_t)> on_snapshot;
};

/// @brief Integrate to cfg.t_end with a uniform step.
///
/// dt is resolved (auto from stability if 0), then rounded down so an integer
/// number of steps lands exactly on t_end. The initial state is dealiased
/// (and, for filtered raw runs, projected onto the well-posed band) before
/// stepping. Throws NumericalError on non-finite fields or when the raw
/// growth guard trips; ConstraintError if the initial shear is not curl-free.
KBKState evolve(KBKState state, const ModelCoefficients& coeffs, const Spectral& sp,
                const SolverConfig& cfg, const EvolveHooks& hooks = {});

} // namespace sw2d
