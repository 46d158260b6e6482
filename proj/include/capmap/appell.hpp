#pragma once

#include <cmath>
#include <cstdlib>

#include "capmap/gamma.hpp"
#include "capmap/quadrature.hpp"
#include "capmap/types.hpp"

namespace capmap {

/// Parameter tuple (a, b, b', c; x, y) of the Appell F1 function.
struct AppellArgs {
    double a = 0.0;
    double b = 0.0;
    double bprime = 0.0;
    double c = 0.0;
    Complex x{};
    Complex y{};

    bool c_is_nonpositive_integer() const {
        return c <= 0.0 && c == std::floor(c);
    }
    void validate_common() const {
        if (c_is_nonpositive_integer())
            throw domain_error("AppellArgs: c must not be a non-positive integer");
        if (!is_finite(x) || !is_finite(y))
            throw domain_error("AppellArgs: non-finite argument");
    }
    void validate_integral() const {
        validate_common();
        if (!(a > 0.0) || !(c - a > 0.0))
            throw domain_error("AppellArgs: integral form requires c > a > 0");
    }
};

enum class F1Method { series, integral };

struct F1Result {
    Complex value{};
    double error = 0.0;
    F1Method method = F1Method::series;
    int work = 0;
};

namespace detail {

// Lies on [1, inf) up to a small margin; such arguments put the Euler
// integrand's singularity on the integration path.
inline bool on_positive_cut(Complex v, double margin = 1e-14) {
    return std::abs(v.imag()) <= margin * (1.0 + std::abs(v.real())) && v.real() >= 1.0;
}

// Gauss 2F1(a, b; c; y) by direct series; |y| < 1 required.
// Returns the sum and a geometric tail bound.
inline std::pair<Complex, double> gauss_2f1_series(double a, double b, double c, Complex y,
                                                   double abs_tol, int max_terms) {
    const double r = std::abs(y);
    Complex term = 1.0, sum = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * y;
        sum += term;
        // asymptotic term ratio tends to |y|; certify with the current ratio
        const double q = std::min(0.999, std::max(r, std::abs((a + n + 1) * (b + n + 1) /
                                                              ((c + n + 1) * (n + 2.0))) *
                                                          r));
        const double tail = std::abs(term) * q / (1.0 - q);
        if (tail < abs_tol && n > 2) return {sum, tail};
    }
    throw convergence_error("gauss_2f1_series: max_terms reached");
}

}  // namespace detail

/// F1 by the double hypergeometric series, summed row-wise:
/// row m carries x^m and an inner Gauss 2F1 in y. Requires |x|, |y| < 1.
inline F1Result appell_f1_series(const AppellArgs& args, const EvalConfig& cfg = {}) {
    cfg.validate();
    args.validate_common();
    const double rx = std::abs(args.x), ry = std::abs(args.y);
    if (!(rx < 1.0) || !(ry < 1.0))
        throw domain_error("appell_f1_series: requires |x| < 1 and |y| < 1");

    F1Result res;
    res.method = F1Method::series;
    Complex sum{};
    double tail_bound = 0.0;
    // row coefficient: (a)_m (b)_m / ((c)_m m!) x^m
    Complex row_coeff = 1.0;
    double row_mag_peak = 0.0;
    for (int m = 0; m < cfg.max_terms; ++m) {
        auto [inner, inner_tail] = detail::gauss_2f1_series(
            args.a + m, args.bprime, args.c + m, args.y, cfg.abs_tol, cfg.max_terms);
        const Complex row = row_coeff * inner;
        sum += row;
        tail_bound = inner_tail * std::abs(row_coeff);
        res.work = m + 1;
        const double row_mag = std::abs(row);
        row_mag_peak = std::max(row_mag_peak, row_mag);
        // outer ratio tends to |x|; certify the remaining rows geometrically
        const double q = std::min(0.999, std::max(rx, std::abs((args.a + m + 1) * (args.b + m + 1) /
                                                               ((args.c + m + 1) * (m + 2.0))) *
                                                          rx));
        const double outer_tail = (row_mag + tail_bound) * q / (1.0 - q);
        if (m > 2 && outer_tail + tail_bound < cfg.abs_tol) {
            res.value = sum;
            res.error = outer_tail + tail_bound;
            if (!is_finite(res.value)) throw convergence_error("appell_f1_series: non-finite sum");
            return res;
        }
        row_coeff *= (args.a + m) * (args.b + m) / ((args.c + m) * (m + 1.0)) * args.x;
    }
    throw convergence_error("appell_f1_series: max_terms reached with tail above tolerance");
}

/// F1 by the Euler integral
///   Gamma(c)/(Gamma(a) Gamma(c-a)) * Int_0^1 s^{a-1} (1-s)^{c-a-1} (1-sx)^{-b} (1-sy)^{-b'} ds
/// with tanh-sinh quadrature absorbing the endpoint singularities.
/// Requires c > a > 0 and x, y off the cut [1, inf).
inline F1Result appell_f1_integral(const AppellArgs& args, const EvalConfig& cfg = {}) {
    cfg.validate();
    args.validate_integral();
    if (detail::on_positive_cut(args.x) || detail::on_positive_cut(args.y))
        throw branch_error("appell_f1_integral: argument lies on the cut [1, inf)");

    const double a = args.a, b = args.b, bp = args.bprime, c = args.c;
    auto integrand = [&](double s, double one_minus_s) -> Complex {
        const Complex ux = 1.0 - s * args.x;
        const Complex uy = 1.0 - s * args.y;
        if (ux.real() <= 0.0 && std::abs(ux.imag()) < 1e-15 * std::abs(ux.real()))
            throw branch_error("appell_f1_integral: 1-sx crossed the negative real axis");
        if (uy.real() <= 0.0 && std::abs(uy.imag()) < 1e-15 * std::abs(uy.real()))
            throw branch_error("appell_f1_integral: 1-sy crossed the negative real axis");
        const double base = (a - 1.0) * std::log(s) + (c - a - 1.0) * std::log(one_minus_s);
        return std::exp(base) * std::pow(ux, -b) * std::pow(uy, -bp);
    };

    const QuadResult q = tanh_sinh_01(integrand, cfg.abs_tol, cfg.max_refinements);
    const double norm =
        std::exp(log_gamma_real(c) - log_gamma_real(a) - log_gamma_real(c - a));
    F1Result res;
    res.value = norm * q.value;
    res.error = norm * q.error;
    res.method = F1Method::integral;
    res.work = q.work;
    if (!is_finite(res.value)) throw convergence_error("appell_f1_integral: non-finite value");
    return res;
}

/// Dispatcher: series inside the comfortable polydisk, Euler integral otherwise.
inline F1Result appell_f1(const AppellArgs& args, const EvalConfig& cfg = {}) {
    const double rx = std::abs(args.x), ry = std::abs(args.y);
    if (rx <= 0.7 && ry <= 0.7) return appell_f1_series(args, cfg);
    if (args.a > 0.0 && args.c - args.a > 0.0) return appell_f1_integral(args, cfg);
    if (rx < 1.0 && ry < 1.0) return appell_f1_series(args, cfg);
    throw domain_error("appell_f1: arguments satisfy neither evaluator's preconditions");
}

}  // namespace capmap
