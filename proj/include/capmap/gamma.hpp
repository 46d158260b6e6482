#pragma once

#include <cmath>
#include <limits>

#include "capmap/types.hpp"

namespace capmap {

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
// Relative accuracy is ~1e-15 across the positive axis.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr double lanczos_coeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline double lanczos_gamma_positive(double x) {
    // valid for x > 0; uses Gamma(x) = Gamma(x+1)/x below 1 via the series itself
    double sum = lanczos_coeff[0];
    for (int k = 1; k < 15; ++k) sum += lanczos_coeff[k] / (x - 1.0 + k);
    const double t = x - 0.5 + lanczos_g;
    return std::sqrt(2.0 * pi) * std::pow(t, x - 0.5) * std::exp(-t) * sum;
}

}  // namespace detail

/// Real gamma function. Positive arguments are the primary domain;
/// negative non-integers are supported through the reflection formula.
inline double gamma_real(double x) {
    if (!std::isfinite(x)) throw domain_error("gamma_real: non-finite argument");
    if (x <= 0.0 && x == std::floor(x))
        throw pole_error("gamma_real: pole at non-positive integer");
    if (x > 171.62) throw domain_error("gamma_real: overflow above representable range");
    if (x < 0.0) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return pi / (std::sin(pi * x) * gamma_real(1.0 - x));
    }
    if (x < 0.5) {
        // recurrence keeps the Lanczos series away from its worst region
        return detail::lanczos_gamma_positive(x + 1.0) / x;
    }
    return detail::lanczos_gamma_positive(x);
}

inline double log_gamma_real(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma_real: requires x > 0");
    if (x < 0.5) return std::log(detail::lanczos_gamma_positive(x + 1.0)) - std::log(x);
    double sum = detail::lanczos_coeff[0];
    for (int k = 1; k < 15; ++k) sum += detail::lanczos_coeff[k] / (x - 1.0 + k);
    const double t = x - 0.5 + detail::lanczos_g;
    return 0.5 * std::log(2.0 * pi) + (x - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace capmap
