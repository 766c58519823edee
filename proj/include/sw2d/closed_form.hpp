#pragma once

#include "sw2d/params.hpp"
#include "sw2d/field2d.hpp"
#include "sw2d/spectral.hpp"

namespace sw2d {

/// @brief Parameters of a traveling solitary wave.
///
/// For the two-layer Boussinesq system the wave is a plane soliton moving at
/// speed c in the direction (cos theta, sin theta); q is unused. For the
/// weakly transverse (KP) line soliton the crest is the line x + q*y = const
/// and theta is unused. Build through make_kbk_soliton / make_kp_soliton,
/// which enforce the admissible speed windows.
struct SolitonSpec {
    double c = 0.0;
    double theta = 0.0;
    double q = 0.0;
    ModelCoefficients coeffs;
};

/// @brief Open interval (c_min, c_max) of admissible soliton speeds.
struct SpeedWindow {
    double c_min;
    double c_max;
};

/// @brief Admissible speeds for the plane soliton: waves must outrun the
///        linear speed c0 and the crest must not touch the nearer plate.
///
/// B > 0 (elevation): c in (c0, c0*(1 + B*h1/(2*A*h)));
/// B < 0 (depression): c in (c0, c0*(1 - B*h2/(2*A*h))).
/// Throws ConstraintError when B = 0 (critical depth ratio, empty window).
SpeedWindow soliton_speed_window(const ModelCoefficients& c);

/// @brief Admissible speeds for the KP line soliton with transverse slope q:
///        c_min = c0*(1 + (beta^2/2)q^2), c_max = c_min + the same plate
///        clearance margin as the plane window.
SpeedWindow kp_speed_window(const ModelCoefficients& c, double q);

/// @brief Crest amplitudes of the plane soliton (no window check):
///        gamma_m = 2(c - c0)/(alpha*B), zeta_m = 2A(c - c0)/(c0*alpha*B).
double kbk_soliton_gamma_max(const ModelCoefficients& coeffs, double c);
double kbk_soliton_zeta_max(const ModelCoefficients& coeffs, double c);

/// @brief Tail decay rate of the plane soliton,
///        c_Delta = sqrt(3(c^2 - c0^2)/(gprime*kappa)) / epsilon.
double kbk_soliton_decay_rate(const ModelCoefficients& coeffs, double c);

/// @brief Crest amplitude of the KP line soliton (no window check):
///        zeta_m = 2*c0*(c - c0*(1 + (beta^2/2)q^2))/(alpha*gprime*B).
double kp_soliton_zeta_max(const ModelCoefficients& coeffs, double c, double q);

/// @brief Validated constructors; throw ConstraintError for speeds outside
///        the open admissible window.
SolitonSpec make_kbk_soliton(const ModelCoefficients& coeffs, double c, double theta = 0.0);
SolitonSpec make_kp_soliton(const ModelCoefficients& coeffs, double c, double q = 0.0);

/// @brief Pointwise plane-soliton profile at longitudinal coordinate x and
///        time t (x measured along the propagation direction).
struct SolitonPoint {
    double zeta;
    double gamma;
};
SolitonPoint kbk_soliton_profile(const SolitonSpec& spec, double x, double t = 0.0);

/// @brief Exact plane-soliton state sampled on a grid at t = 0; gamma points
///        along (cos theta, sin theta). Throws ConstraintError if the profile
///        has not decayed below 1e-10 (relative to the crest) at the box edge.
struct SolitonState {
    Field2D zeta;
    Field2D gamma1;
    Field2D gamma2;
};
SolitonState kbk_soliton_state(const SolitonSpec& spec, const Grid2D& grid);

/// @brief Residual of the traveling-wave Newton ODE on the sampled profile,
///        evaluated with spectral derivatives:
///        (2 eps^2 gprime kappa/3) gamma_xx
///          - (alpha^2 B^2 gamma^3 - 3 c alpha B gamma^2 + 2(c^2 - A gprime) gamma).
/// The grid is used y-trivially (profile constant in y, theta = 0).
Field2D newton_residual(const SolitonSpec& spec, const Spectral& sp);

/// @brief KP line-soliton profile zeta_m * sech^2(W*(x + q*y - c*t)) sampled
///        at t = 0; W = sqrt(3*alpha*B*zeta_m/(4*eps^2*kappa)).
Field2D kp_line_soliton(const SolitonSpec& spec, const Grid2D& grid);

/// @brief Slaved interface displacement of the gradient-flow stationary
///        family: zeta = -(alpha*B/(2*gprime)) |gamma|^2.
Field2D stationary_zeta(const Field2D& gamma1, const Field2D& gamma2,
                        const ModelCoefficients& coeffs);

/// @brief Stationarity defect of a given shear field:
///        div(A*gamma - (alpha^2 B^2/(2 gprime)) |gamma|^2 gamma
///            + (eps^2 kappa/3) Laplacian(gamma)).
/// Zero residual means (gamma, stationary_zeta(gamma)) is an equilibrium.
Field2D stationary_residual(const Field2D& gamma1, const Field2D& gamma2,
                            const ModelCoefficients& coeffs, const Spectral& sp);

} // namespace sw2d
