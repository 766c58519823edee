#pragma once

#include <string>

namespace sw2d {

/// @brief Dimensional description of the two-layer configuration.
///
/// Layer 1 is the upper fluid (density rho1, rest thickness h1), layer 2 the
/// lower one (rho2, h2); rigid lid and flat bottom. `a` is a characteristic
/// wave amplitude, `L` a characteristic wavelength along x and `Lprime` the
/// (longer) transverse scale used by the weakly two-dimensional reduction.
struct PhysicalParams {
    double rho1 = 1.0;
    double rho2 = 2.0;
    double h1 = 1.0;
    double h2 = 1.0;
    double g = 1.0;
    double a = 0.02;       ///< amplitude scale; alpha = a/h
    double L = 20.0;       ///< wavelength scale; epsilon = h/L
    double Lprime = 200.0; ///< transverse scale; beta = L/Lprime (0 disables)

    double h() const { return h1 + h2; }
};

/// @brief Reduced coefficients of the two-layer weakly nonlinear model.
///
/// A multiplies the linear shear flux, B the quadratic (sign-changing)
/// nonlinearity, kappa the third-order dispersion. gprime is the reduced
/// gravity retained as an explicit coefficient (the nondimensionalized
/// equations have gprime = 1), c0 = sqrt(A*gprime) the linear long-wave speed.
/// alpha/epsilon/beta are the small parameters; the unit convention sets all
/// three to 1 and absorbs them into the fields.
///
/// The originating PhysicalParams are kept so that downstream formulas that
/// need the raw depths/densities (speed windows, velocity reconstruction)
/// remain self-contained.
struct ModelCoefficients {
    double A = 0.0;
    double B = 0.0;
    double kappa = 0.0;
    double gprime = 1.0;
    double c0 = 0.0;
    double alpha = 1.0;
    double epsilon = 1.0;
    double beta = 0.0; ///< 0 when no transverse scale is in play
    PhysicalParams phys;

    double h1_frac() const { return phys.h1 / phys.h(); }
    double h2_frac() const { return phys.h2 / phys.h(); }
};

/// @brief Which convention the solver runs in.
///
/// scaled: alpha = a/h, epsilon = h/L, beta = L/Lprime appear explicitly.
/// unit:   alpha = epsilon = beta = 1 (scalings absorbed into the fields).
enum class Convention { scaled, unit };

/// @brief Build ModelCoefficients from dimensional parameters.
///
/// A     = h1*h2/h^2
/// B     = (rho2*h1^2 - rho1*h2^2) / (h*(rho2*h1 + rho1*h2))
/// kappa = h1^2*h2^2*(rho1*h1 + rho2*h2) / (h^4*(rho2*h1 + rho1*h2))
/// gprime defaults to 1 (nondimensional buoyancy); c0 = sqrt(A*gprime).
///
/// Throws ConfigError unless rho2 > rho1 > 0 and h1, h2 > 0 (stable
/// stratification between rigid plates).
ModelCoefficients derive_coefficients(const PhysicalParams& p,
                                      Convention convention = Convention::scaled,
                                      double gprime = 1.0);

/// @brief Depth ratio h1/h2 = sqrt(rho1/rho2) at which B vanishes.
double critical_depth_ratio(double rho1, double rho2);

/// @brief Validate the weakly nonlinear regime bookkeeping; returns a
///        human-readable note (empty when unremarkable).
///
/// Checks alpha ~ epsilon^2 within a factor of 10 and beta^2 ~ alpha within a
/// factor of 10 when beta > 0. Violations are advisory, not errors: the
/// equations remain integrable outside the asymptotic regime.
std::string validate_regime(const ModelCoefficients& c);

/// @brief Scale factors that restore dimensions, for documentation and output
///        annotation. sigma_tau: multiply nondimensional (sigma, tau) by
///        sqrt(g*(rho2-rho1)*(rho2*h1+rho1*h2)); energy_density: the
///        Hamiltonian density was divided by D = g*h^2*(rho2-rho1)
///        (equivalently a time rescaling).
struct ScaleFactors {
    double sigma_tau;
    double energy_density;
};
ScaleFactors scale_factors(const PhysicalParams& p);

} // namespace sw2d
