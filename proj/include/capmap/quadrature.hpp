#pragma once

#include <cmath>
#include <utility>

#include "capmap/types.hpp"

namespace capmap {

struct QuadResult {
    Complex value{};
    double error = 0.0;
    int work = 0;  // levels for tanh-sinh, subdivisions for adaptive rules
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double gk15_nodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
inline constexpr double gk15_wk[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
inline constexpr double gk15_wg[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

template <class F>
std::pair<Complex, double> gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex k{}, g{};
    for (int i = 0; i < 15; ++i) {
        const Complex v = f(c + h * gk15_nodes[i]);
        k += gk15_wk[i] * v;
        if (i % 2 == 1) g += gk15_wg[i / 2] * v;
    }
    k *= h;
    g *= h;
    return {k, std::abs(k - g)};
}

template <class F>
void adaptive_gk_rec(F&& f, double a, double b, double tol, int depth, int max_depth,
                     QuadResult& out) {
    auto [v, e] = gk15(f, a, b);
    // below ~1e-15 relative, K-G stalls at the rounding floor; accept there
    const double floor_tol = 1e-15 * (1.0 + std::abs(v));
    if (e <= tol || e <= floor_tol || depth >= max_depth) {
        if (e > tol && e > floor_tol && depth >= max_depth)
            throw convergence_error("adaptive_gk: refinement limit reached");
        out.value += v;
        out.error += e;
        out.work += 1;
        return;
    }
    const double m = 0.5 * (a + b);
    adaptive_gk_rec(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
    adaptive_gk_rec(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7-15 over a real parameter, complex integrand.
template <class F>
QuadResult adaptive_gk(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
    QuadResult out;
    if (a == b) return out;
    detail::adaptive_gk_rec(f, a, b, abs_tol, 0, max_depth, out);
    return out;
}

/// Double-exponential (tanh-sinh) quadrature on (0, 1) for integrands with
/// integrable endpoint singularities. The integrand is called as
/// f(s, 1 - s) with both values computed in a cancellation-free way.
template <class F>
QuadResult tanh_sinh_01(F&& f, double abs_tol, int max_level = 12) {
    // Large enough that even a strong endpoint singularity s^{a-1}, a ~ 0.05,
    // leaves a truncated tail below 1e-16: exp(-0.05*pi*sinh(6.5)) ~ 1e-23.
    const double umax = 6.5;
    double h = 1.0;

    auto node_sum = [&](double h_step, bool odd_only) {
        Complex sum{};
        const double start = odd_only ? h_step : 0.0;
        const double stride = odd_only ? 2.0 * h_step : h_step;
        for (double u = start; u <= umax; u += stride) {
            const double w = std::exp(-pi * std::sinh(u));
            const double s = 1.0 / (1.0 + w);        // node for +u (near 1)
            const double sm1 = w / (1.0 + w);        // 1 - node
            const double ds = pi * std::cosh(u) * s * sm1;
            if (ds < 1e-300 || sm1 < 1e-300) break;  // weights below any useful scale
            sum += ds * f(s, sm1);                   // node at +u
            if (u > 0.0) sum += ds * f(sm1, s);      // mirrored node at -u
        }
        return sum;
    };

    Complex total = node_sum(h, false) * h;
    QuadResult out;
    out.value = total;
    out.error = std::abs(total);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        const Complex refined = 0.5 * total + h * node_sum(h, true);
        out.error = std::abs(refined - total);
        total = refined;
        out.value = total;
        out.work = level;
        if (level >= 3 && out.error <= abs_tol * 0.1) return out;
    }
    if (out.error > abs_tol)
        throw convergence_error("tanh_sinh_01: refinement limit reached");
    return out;
}

}  // namespace capmap
