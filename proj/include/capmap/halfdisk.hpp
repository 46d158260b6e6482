#pragma once

#include <cmath>

#include "capmap/laurent.hpp"
#include "capmap/types.hpp"

namespace capmap {
namespace halfdisk {

/// Interior of the open upper half-disk.
inline bool contains(Complex z, double margin = 0.0) {
    return z.imag() > margin && std::abs(z) < 1.0 - margin;
}

/// Strip map ell(z) = ln((1+z)^2 / (1-z)^2), upper half-disk -> horizontal
/// strip of width pi.
inline Complex ell(Complex z) {
    if (!contains(z)) throw domain_error("ell: z must lie in the open upper half-disk");
    return 2.0 * (std::log(1.0 + z) - std::log(1.0 - z));
}

inline Complex ell_derivative(Complex z) {
    return 2.0 / (1.0 + z) + 2.0 / (1.0 - z);
}

/// Green's-function map f_w of the half-disk: f_w(w) = 0, |f_w| < 1,
/// ln|f_w| is the Green's function with pole at w.
inline Complex green_map(Complex w, Complex z) {
    if (!contains(w)) throw domain_error("green_map: w must lie in the open upper half-disk");
    if (!contains(z)) throw domain_error("green_map: z must lie in the open upper half-disk");
    const Complex ez = std::exp(ell(z));
    const Complex ew = std::exp(ell(w));
    return (ez - ew) / (ez - std::conj(ew));
}

/// h(w) = lim_{z->w} |f_w(z)/(z-w)|; 1/h(w) is the conformal radius at w.
inline double h_general(Complex w) {
    if (!contains(w)) throw domain_error("h_general: w must lie in the open upper half-disk");
    const Complex ew = std::exp(ell(w));
    return std::abs(ew * ell_derivative(w) / (ew - std::conj(ew)));
}

/// Restriction of h to the imaginary axis: h(iy) = (1+y^2) / (2y(1-y^2)).
inline double h_axis(double y) {
    if (!(y > 0.0 && y < 1.0)) throw domain_error("h_axis: requires 0 < y < 1");
    return (1.0 + y * y) / (2.0 * y * (1.0 - y * y));
}

struct InnerCenterResult {
    double y0 = 0.0;
    double max_inner_radius = 0.0;
    double h_at_y0 = 0.0;
};

/// Inner conformal center of the half-disk: the minimizer of h on the
/// imaginary axis. Golden-section bracket, then bisection on the centered
/// finite-difference derivative.
inline InnerCenterResult inner_center() {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1e-6, hi = 1.0 - 1e-6;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = h_axis(c), fd = h_axis(d);
    while (hi - lo > 1e-8) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = h_axis(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = h_axis(d);
        }
    }
    auto deriv = [](double y) {
        const double e = 1e-7;
        return (h_axis(y + e) - h_axis(y - e)) / (2.0 * e);
    };
    double a = std::max(1e-6, lo - 1e-6), b = std::min(1.0 - 1e-6, hi + 1e-6);
    double da = deriv(a);
    for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
        const double m = 0.5 * (a + b);
        const double dm = deriv(m);
        if ((da < 0.0) == (dm < 0.0)) {
            a = m;
            da = dm;
        } else {
            b = m;
        }
    }
    InnerCenterResult res;
    res.y0 = 0.5 * (a + b);
    res.h_at_y0 = h_axis(res.y0);
    res.max_inner_radius = 1.0 / res.h_at_y0;
    return res;
}

/// Moebius-type building block of the exterior map:
/// m(z) = (sqrt(3)/2 + i/2 + 1/z) / (-sqrt(3)/2 + i/2 + 1/z).
/// Formulated via m = (1 + c1 z)/(1 + c2 z) so that m - 1 is available
/// without cancellation near z = 0.
inline Complex m_of_z(Complex z) {
    if (z == Complex{}) throw pole_error("m_of_z: z = 0");
    static const Complex c1{std::sqrt(3.0) / 2.0, 0.5};
    static const Complex c2{-std::sqrt(3.0) / 2.0, 0.5};
    const Complex den = 1.0 + c2 * z;
    if (std::abs(den) < 1e-14) throw pole_error("m_of_z: pole of the Moebius factor");
    return (1.0 + c1 * z) / den;
}

/// m(z) - 1, stable for small z.
inline Complex m_of_z_minus_one(Complex z) {
    static const Complex c2{-std::sqrt(3.0) / 2.0, 0.5};
    const Complex den = 1.0 + c2 * z;
    if (std::abs(den) < 1e-14) throw pole_error("m_of_z_minus_one: pole of the Moebius factor");
    return std::sqrt(3.0) * z / den;
}

/// Exterior map g of the half-disk: disk minus origin onto the complement,
/// g(z) = (1 + 2 m^{3/2} + m^3) / (-1 + m^3) = (4/(3 sqrt(3)))/z + 2i/(3 sqrt(3)) + O(z).
inline Complex exterior_map_halfdisk(Complex z) {
    if (z == Complex{}) throw pole_error("exterior_map_halfdisk: pole at z = 0");
    const Complex m = m_of_z(z);
    const Complex m32 = std::pow(m, 1.5);
    const Complex num = 1.0 + 2.0 * m32 + m * m * m;
    // m^3 - 1 through m - 1 avoids cancellation for small |z|
    const Complex e = m_of_z_minus_one(z);
    const Complex den = e * (m * m + m + 1.0);
    if (std::abs(den) == 0.0) throw pole_error("exterior_map_halfdisk: m^3 = 1");
    return num / den;
}

struct OuterSummaryHalfDisk {
    double outer_radius = 0.0;
    Complex outer_center{};
};

/// Outer radius and outer conformal center of the half-disk via contour
/// moments of the exterior map.
inline OuterSummaryHalfDisk outer_summary_halfdisk(double r = 0.5) {
    const LaurentSummary s =
        laurent_of_function([](Complex z) { return exterior_map_halfdisk(z); }, r);
    OuterSummaryHalfDisk out;
    out.outer_radius = s.kappa;
    out.outer_center = s.center;
    return out;
}

}  // namespace halfdisk
}  // namespace capmap
