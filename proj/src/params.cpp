#include "sw2d/params.hpp"

#include "sw2d/errors.hpp"

#include <cmath>
#include <sstream>

namespace sw2d {

ModelCoefficients derive_coefficients(const PhysicalParams& p, Convention convention,
                                      double gprime) {
    if (!(p.rho1 > 0.0) || !(p.rho2 > 0.0))
        throw ConfigError("densities must be positive");
    if (!(p.rho2 > p.rho1))
        throw ConfigError("unstable stratification: rho2 must exceed rho1 "
                          "(heavier fluid below)");
    if (!(p.h1 > 0.0) || !(p.h2 > 0.0))
        throw ConfigError("layer depths must be positive");
    if (!(gprime > 0.0))
        throw ConfigError("gprime must be positive");

    const double h = p.h();
    const double s = p.rho2 * p.h1 + p.rho1 * p.h2;

    ModelCoefficients c;
    c.A = p.h1 * p.h2 / (h * h);
    c.B = (p.rho2 * p.h1 * p.h1 - p.rho1 * p.h2 * p.h2) / (h * s);
    c.kappa = p.h1 * p.h1 * p.h2 * p.h2 * (p.rho1 * p.h1 + p.rho2 * p.h2) /
              (h * h * h * h * s);
    c.gprime = gprime;
    c.c0 = std::sqrt(c.A * gprime);
    if (convention == Convention::scaled) {
        if (!(p.a > 0.0) || !(p.L > 0.0))
            throw ConfigError("scaled convention requires positive a and L");
        c.alpha = p.a / h;
        c.epsilon = h / p.L;
        c.beta = (p.Lprime > 0.0) ? p.L / p.Lprime : 0.0;
    } else {
        c.alpha = 1.0;
        c.epsilon = 1.0;
        c.beta = 1.0;
    }
    c.phys = p;
    return c;
}

double critical_depth_ratio(double rho1, double rho2) {
    if (!(rho1 > 0.0) || !(rho2 > 0.0))
        throw ConfigError("densities must be positive");
    return std::sqrt(rho1 / rho2);
}

std::string validate_regime(const ModelCoefficients& c) {
    std::ostringstream note;
    const double e2 = c.epsilon * c.epsilon;
    if (c.alpha > 10.0 * e2 || c.alpha < 0.1 * e2)
        note << "alpha=" << c.alpha << " is far from epsilon^2=" << e2
             << "; weakly nonlinear balance alpha ~ epsilon^2 is strained. ";
    if (c.beta > 0.0) {
        const double b2 = c.beta * c.beta;
        if (b2 > 10.0 * c.alpha || b2 < 0.1 * c.alpha)
            note << "beta^2=" << b2 << " is far from alpha=" << c.alpha
                 << "; weak transversality balance beta^2 ~ alpha is strained. ";
    }
    return note.str();
}

ScaleFactors scale_factors(const PhysicalParams& p) {
    ScaleFactors f;
    f.sigma_tau = std::sqrt(p.g * (p.rho2 - p.rho1) * (p.rho2 * p.h1 + p.rho1 * p.h2));
    f.energy_density = p.g * p.h() * p.h() * (p.rho2 - p.rho1);
    return f;
}

} // namespace sw2d
