#pragma once

#include <cmath>
#include <vector>

#include "capmap/types.hpp"

namespace capmap {

/// Leading Laurent data of a map with a simple pole at 0, extracted from
/// trapezoid moments of samples on a concentric circle.
struct LaurentSummary {
    double kappa = 0.0;        // |coefficient of 1/z|
    Complex center{};          // constant term
    std::vector<Complex> higher;  // coefficients of z^1 .. z^N (optional)
    double radius_used = 0.0;
    int node_count = 0;
    double error_estimate = 0.0;
};

namespace detail {

/// Moments of uniformly spaced samples g(r e^{i t_j}), t_j = t0 + 2 pi j / N.
/// c_{-1} = (1/N) sum g_j r e^{i t_j},  c_0 = (1/N) sum g_j,
/// c_k = (1/N) sum g_j (r e^{i t_j})^{-k}.
inline LaurentSummary laurent_from_samples(const std::vector<Complex>& samples, double r,
                                           double t0, int n_higher) {
    const int n = static_cast<int>(samples.size());
    Complex c_m1{}, c_0{};
    std::vector<Complex> higher(static_cast<size_t>(n_higher), Complex{});
    for (int j = 0; j < n; ++j) {
        const double t = t0 + 2.0 * pi * j / n;
        const Complex zj = std::polar(r, t);
        c_m1 += samples[static_cast<size_t>(j)] * zj;
        c_0 += samples[static_cast<size_t>(j)];
        Complex zpow = 1.0 / zj;
        for (int k = 0; k < n_higher; ++k) {
            higher[static_cast<size_t>(k)] += samples[static_cast<size_t>(j)] * zpow;
            zpow /= zj;
        }
    }
    LaurentSummary out;
    out.kappa = std::abs(c_m1) / n;
    out.center = c_0 / static_cast<double>(n);
    for (auto& h : higher) h /= static_cast<double>(n);
    out.higher = std::move(higher);
    out.radius_used = r;
    out.node_count = n;
    return out;
}

}  // namespace detail

/// Laurent extraction for any callable g with a simple pole at 0 that is
/// analytic on 0 < |z| < 1. Node count doubles until kappa and center settle.
template <class G>
LaurentSummary laurent_of_function(G&& g, double r, int n_start = 64, int n_higher = 0,
                                   double settle_tol = 1e-10, int max_doublings = 6) {
    if (!(r > 0.05 && r < 1.0)) throw domain_error("laurent_of_function: requires 0.05 < r < 1");
    int n = n_start;
    if (n < 64) n = 64;
    // round up to a power of two
    int p = 64;
    while (p < n) p *= 2;
    n = p;

    auto sample = [&](int count) {
        std::vector<Complex> s(static_cast<size_t>(count));
        for (int j = 0; j < count; ++j)
            s[static_cast<size_t>(j)] = g(std::polar(r, 2.0 * pi * j / count));
        return s;
    };

    LaurentSummary prev = detail::laurent_from_samples(sample(n), r, 0.0, n_higher);
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        LaurentSummary cur = detail::laurent_from_samples(sample(n), r, 0.0, n_higher);
        const double diff =
            std::abs(cur.kappa - prev.kappa) + std::abs(cur.center - prev.center);
        cur.error_estimate = diff;
        if (diff < settle_tol) return cur;
        prev = cur;
    }
    throw convergence_error("laurent_of_function: node doubling did not settle");
}

}  // namespace capmap
