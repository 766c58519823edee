#include "sw2d/closed_form.hpp"

#include "sw2d/errors.hpp"

#include <cmath>
#include <sstream>

namespace sw2d {

namespace {

void require_nonzero_B(const ModelCoefficients& c) {
    if (c.B == 0.0)
        throw ConstraintError("B = 0 (critical depth ratio): the soliton speed "
                              "window is empty");
}

void check_window(double c, const SpeedWindow& w, const char* kind) {
    if (!(c > w.c_min) || !(c < w.c_max)) {
        std::ostringstream os;
        os << kind << " speed c = " << c << " outside the admissible open window ("
           << w.c_min << ", " << w.c_max << ")";
        throw ConstraintError(os.str());
    }
}

} // namespace

SpeedWindow soliton_speed_window(const ModelCoefficients& c) {
    require_nonzero_B(c);
    // Plate clearance: zeta_m at c_max equals h1/h (B>0) or -h2/h (B<0).
    const double margin = (c.B > 0.0) ? c.B * c.h1_frac() / (2.0 * c.A)
                                      : -c.B * c.h2_frac() / (2.0 * c.A);
    return {c.c0, c.c0 * (1.0 + margin)};
}

SpeedWindow kp_speed_window(const ModelCoefficients& c, double q) {
    require_nonzero_B(c);
    const double cmin = c.c0 * (1.0 + 0.5 * c.beta * c.beta * q * q);
    const double margin = (c.B > 0.0) ? c.B * c.h1_frac() / (2.0 * c.A)
                                      : -c.B * c.h2_frac() / (2.0 * c.A);
    return {cmin, cmin + c.c0 * margin};
}

double kbk_soliton_gamma_max(const ModelCoefficients& coeffs, double c) {
    return 2.0 * (c - coeffs.c0) / (coeffs.alpha * coeffs.B);
}

double kbk_soliton_zeta_max(const ModelCoefficients& coeffs, double c) {
    return 2.0 * coeffs.A * (c - coeffs.c0) / (coeffs.c0 * coeffs.alpha * coeffs.B);
}

double kbk_soliton_decay_rate(const ModelCoefficients& coeffs, double c) {
    return std::sqrt(3.0 * (c * c - coeffs.c0 * coeffs.c0) /
                     (coeffs.gprime * coeffs.kappa)) /
           coeffs.epsilon;
}

double kp_soliton_zeta_max(const ModelCoefficients& coeffs, double c, double q) {
    const double cmin = coeffs.c0 * (1.0 + 0.5 * coeffs.beta * coeffs.beta * q * q);
    return 2.0 * coeffs.c0 * (c - cmin) / (coeffs.alpha * coeffs.gprime * coeffs.B);
}

SolitonSpec make_kbk_soliton(const ModelCoefficients& coeffs, double c, double theta) {
    check_window(c, soliton_speed_window(coeffs), "plane soliton");
    SolitonSpec s;
    s.c = c;
    s.theta = theta;
    s.coeffs = coeffs;
    return s;
}

SolitonSpec make_kp_soliton(const ModelCoefficients& coeffs, double c, double q) {
    check_window(c, kp_speed_window(coeffs, q), "line soliton");
    SolitonSpec s;
    s.c = c;
    s.q = q;
    s.coeffs = coeffs;
    return s;
}

SolitonPoint kbk_soliton_profile(const SolitonSpec& spec, double x, double t) {
    const ModelCoefficients& mc = spec.coeffs;
    const double c = spec.c;
    const double c0 = mc.c0;
    const double M = c * c - c0 * c0;
    const double cD = kbk_soliton_decay_rate(mc, c);
    // The profile is even in X; evaluating with E = exp(-|X| cD) <= 1 keeps
    // every intermediate bounded for arbitrarily large |X|.
    const double X = x - c * t;
    const double E = std::exp(-std::abs(X) * cD);
    const double den = 2.0 * c * E + c0 * E * E + c0;
    SolitonPoint p;
    p.gamma = 4.0 * M * E / (mc.alpha * mc.B * den);
    p.zeta = 4.0 * mc.A * M * E * (2.0 * c0 * E + c * E * E + c) /
             (c0 * mc.alpha * mc.B * den * den);
    return p;
}

SolitonState kbk_soliton_state(const SolitonSpec& spec, const Grid2D& grid) {
    SolitonState st{Field2D(grid), Field2D(grid), Field2D(grid)};
    const double ct = std::cos(spec.theta);
    const double sn = std::sin(spec.theta);
    double edge = 0.0, crest = 0.0;
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double X = ct * grid.x(i) + sn * grid.y(j);
            const SolitonPoint p = kbk_soliton_profile(spec, X);
            st.zeta(i, j) = p.zeta;
            st.gamma1(i, j) = ct * p.gamma;
            st.gamma2(i, j) = sn * p.gamma;
            crest = std::max(crest, std::abs(p.zeta));
            if (i == 0 || j == 0) edge = std::max(edge, std::abs(p.zeta));
        }
    }
    if (crest > 0.0 && edge > 1e-10 * crest)
        throw ConstraintError("soliton has not decayed at the box edge; enlarge "
                              "the box (relative tail " +
                              std::to_string(edge / crest) + ")");
    return st;
}

Field2D newton_residual(const SolitonSpec& spec, const Spectral& sp) {
    const Grid2D& grid = sp.grid();
    const ModelCoefficients& mc = spec.coeffs;
    Field2D gamma(grid);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        const double g = kbk_soliton_profile(spec, grid.x(i)).gamma;
        for (std::size_t j = 0; j < grid.ny; ++j) gamma(i, j) = g;
    }
    const double mu = 2.0 * mc.epsilon * mc.epsilon * mc.gprime * mc.kappa / 3.0;
    Field2D res = sp.laplacian(gamma); // y-trivial: equals gamma_xx
    res *= mu;
    const double aB = mc.alpha * mc.B;
    const double lin = 2.0 * (spec.c * spec.c - mc.A * mc.gprime);
    for (std::size_t n = 0; n < res.size(); ++n) {
        const double g = gamma[n];
        res[n] -= aB * aB * g * g * g - 3.0 * spec.c * aB * g * g + lin * g;
    }
    return res;
}

Field2D kp_line_soliton(const SolitonSpec& spec, const Grid2D& grid) {
    const ModelCoefficients& mc = spec.coeffs;
    const double zm = kp_soliton_zeta_max(mc, spec.c, spec.q);
    const double W = std::sqrt(3.0 * mc.alpha * mc.B * zm /
                               (4.0 * mc.epsilon * mc.epsilon * mc.kappa));
    Field2D z(grid);
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double s = 1.0 / std::cosh(W * (grid.x(i) + spec.q * grid.y(j)));
            z(i, j) = zm * s * s;
        }
    }
    return z;
}

Field2D stationary_zeta(const Field2D& gamma1, const Field2D& gamma2,
                        const ModelCoefficients& coeffs) {
    Field2D z(gamma1.grid());
    const double f = -coeffs.alpha * coeffs.B / (2.0 * coeffs.gprime);
    for (std::size_t n = 0; n < z.size(); ++n)
        z[n] = f * (gamma1[n] * gamma1[n] + gamma2[n] * gamma2[n]);
    return z;
}

Field2D stationary_residual(const Field2D& gamma1, const Field2D& gamma2,
                            const ModelCoefficients& coeffs, const Spectral& sp) {
    const Grid2D& grid = gamma1.grid();
    const double aB = coeffs.alpha * coeffs.B;
    const double cube = -aB * aB / (2.0 * coeffs.gprime);
    const double disp = coeffs.epsilon * coeffs.epsilon * coeffs.kappa / 3.0;
    Field2D f1(grid), f2(grid);
    for (std::size_t n = 0; n < f1.size(); ++n) {
        const double g2 = gamma1[n] * gamma1[n] + gamma2[n] * gamma2[n];
        f1[n] = coeffs.A * gamma1[n] + cube * g2 * gamma1[n];
        f2[n] = coeffs.A * gamma2[n] + cube * g2 * gamma2[n];
    }
    f1.axpy(disp, sp.laplacian(gamma1));
    f2.axpy(disp, sp.laplacian(gamma2));
    return sp.div2(f1, f2);
}

} // namespace sw2d
