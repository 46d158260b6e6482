#pragma once

#include <cmath>

#include "capmap/appell.hpp"
#include "capmap/gamma.hpp"
#include "capmap/sc_exterior.hpp"
#include "capmap/triangle.hpp"
#include "capmap/types.hpp"

namespace capmap {

/// Exact Appell-F1 representation of the isosceles integral f(z).
/// All fractional powers use the principal branch.
inline Complex f_closed_isosceles(Complex z, ApexAngle apex, const EvalConfig& cfg = {}) {
    cfg.validate();
    const double th = apex.theta;
    const double sp = std::sqrt(pi), st = std::sqrt(th);

    const Complex zp1 = z + 1.0;
    const Complex zm1 = z - 1.0;

    const Complex xi = (Complex{sp, -st} * zp1) / (2.0 * sp);
    const Complex eta = (Complex{sp, st} * zp1) / (2.0 * sp);
    const Complex core = (pi * zm1 * zm1 + th * zp1 * zp1) / (pi + th);
    const Complex phi = std::pow(core, (pi + th) / (2.0 * pi));
    const Complex psi = std::pow(core, (pi - th) / (2.0 * pi));
    const Complex delta = std::pow(-sp * zm1 - Complex{0.0, st} * zp1, (pi - th) / (2.0 * pi)) *
                          std::pow(-sp * zm1 + Complex{0.0, st} * zp1, (pi - th) / (2.0 * pi));

    const double bb = (pi - th) / (2.0 * pi);
    AppellArgs first{1.0 - th / pi, bb, bb, 2.0 - th / pi, xi, eta};
    AppellArgs second{2.0 - th / pi, bb, bb, 3.0 - th / pi, eta, xi};
    const Complex F1a = appell_f1(first, cfg).value;
    const Complex F1b = appell_f1(second, cfg).value;

    const double pref =
        std::pow(2.0, th / pi) * std::pow(pi, (pi + th) / (2.0 * pi)) /
        (2.0 * pi * pi + pi * th - th * th);
    const Complex bracket = -2.0 * (2.0 * pi - th) * F1a + (pi + th) * zp1 * F1b;

    if (z == Complex{}) throw pole_error("f_closed_isosceles: pole at z = 0");
    const Complex braces = -phi / z + pref * (delta / psi) * bracket;
    return std::pow(zp1, 1.0 - th / pi) * braces;
}

/// kappa of the right isosceles triangle in closed form:
/// 3^{3/4} Gamma(1/4)^2 / (2^{7/2} pi^{3/2}).
inline double closed_form_kappa_right_isosceles() {
    const double g = gamma_real(0.25);
    return std::pow(3.0, 0.75) / (std::pow(2.0, 3.5) * std::pow(pi, 1.5)) * g * g;
}

/// lambda = kappa * 2^{5/4}/3^{3/4} * [2 F1(1/2,1/4,1/4,3/2; (2-i sqrt2)/4, (2+i sqrt2)/4)
///                                     - F1(3/2,1/4,1/4,5/2; (2+i sqrt2)/4, (2-i sqrt2)/4)].
inline Complex closed_form_lambda_right_isosceles(const EvalConfig& cfg = {}) {
    const double kappa = closed_form_kappa_right_isosceles();
    const Complex u{0.5, -std::sqrt(2.0) / 4.0};
    const Complex v = std::conj(u);
    const Complex f1 = appell_f1(AppellArgs{0.5, 0.25, 0.25, 1.5, u, v}, cfg).value;
    const Complex f2 = appell_f1(AppellArgs{1.5, 0.25, 0.25, 2.5, v, u}, cfg).value;
    return kappa * std::pow(2.0, 1.25) / std::pow(3.0, 0.75) * (2.0 * f1 - f2);
}

/// Outer conformal center of the triangle with vertices 0, 1, i:
/// ((1+i)/sqrt(2)) * lambda.
inline Complex outer_center_unit_legs_right_triangle(const EvalConfig& cfg = {}) {
    return Complex{1.0, 1.0} / std::sqrt(2.0) * closed_form_lambda_right_isosceles(cfg);
}

}  // namespace capmap
