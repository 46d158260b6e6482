#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <utility>
#include <cmath>
#include <random>
#include <vector>

#include "capmap/gamma.hpp"
#include "capmap/triangle.hpp"
#include "capmap/types.hpp"

namespace capmap {

struct TriangleGeometry {
    std::array<double, 3> angles{};  // opposite sides a, b, c
    double area = 0.0;
    double circumradius = 0.0;
};

/// Law-of-cosines angles, Heron area, circumradius.
inline TriangleGeometry triangle_geometry(const Triangle& tri) {
    const auto& [a, b, c] = tri.sides();
    TriangleGeometry g;
    g.angles[0] = std::acos(std::clamp((b * b + c * c - a * a) / (2.0 * b * c), -1.0, 1.0));
    g.angles[1] = std::acos(std::clamp((a * a + c * c - b * b) / (2.0 * a * c), -1.0, 1.0));
    g.angles[2] = std::acos(std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0));
    const double s = 0.5 * (a + b + c);
    g.area = std::sqrt(s * (s - a) * (s - b) * (s - c));
    g.circumradius = a * b * c / std::sqrt((a + b + c) * (b + c - a) * (c + a - b) * (a + b - c));
    return g;
}

/// q(x) = (1/Gamma(x)) sqrt(x^x / (1-x)^{1-x}).
inline double haegi_q(double x) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("haegi_q: requires 0 < x < 1");
    const double log_num = x * std::log(x);
    const double log_den = (1.0 - x) * std::log(1.0 - x);
    return std::exp(0.5 * (log_num - log_den) - log_gamma_real(x));
}

enum class CapacityMethod { haegi, isosceles_formula, sc_laurent };

struct CapacityResult {
    double kappa = 0.0;
    CapacityMethod method = CapacityMethod::haegi;
};

/// Haegi's closed-form logarithmic capacity of a triangle:
/// kappa = A / (4 pi^2 q(alpha/pi) q(beta/pi) q(gamma/pi) R).
inline CapacityResult haegi_capacity(const Triangle& tri) {
    const TriangleGeometry g = triangle_geometry(tri);
    const double denom = 4.0 * pi * pi * haegi_q(g.angles[0] / pi) * haegi_q(g.angles[1] / pi) *
                         haegi_q(g.angles[2] / pi) * g.circumradius;
    return {g.area / denom, CapacityMethod::haegi};
}

/// Isosceles specialization kappa(theta) for T_theta (unit equal sides).
inline CapacityResult isosceles_capacity(ApexAngle apex) {
    const double th = apex.theta;
    const double val = std::sqrt(pi + th) / (8.0 * std::pow(pi, 2.5)) *
                       std::pow((pi + th) / (4.0 * th), th / (2.0 * pi)) *
                       (std::sin(th) * std::sin(th) / std::sin(th / 2.0)) *
                       gamma_real(th / pi) * std::pow(gamma_real((pi - th) / (2.0 * pi)), 2);
    return {val, CapacityMethod::isosceles_formula};
}

/// Apex angle maximizing kappa(theta) over (0, pi), with the maximal value.
inline std::pair<double, double> maximize_isosceles_capacity() {
    auto kappa = [](double th) { return isosceles_capacity(ApexAngle(th, true)).kappa; };
    // golden-section bracket
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1.0, hi = pi - 0.02;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = kappa(c), fd = kappa(d);
    while (hi - lo > 1e-6) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = kappa(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = kappa(d);
        }
    }
    // Newton polish on the centered-difference derivative
    double th = 0.5 * (lo + hi);
    const double e = 1e-5;
    for (int it = 0; it < 8; ++it) {
        const double d1 = (kappa(th + e) - kappa(th - e)) / (2.0 * e);
        const double d2 = (kappa(th + e) - 2.0 * kappa(th) + kappa(th - e)) / (e * e);
        if (d2 == 0.0) break;
        const double step = d1 / d2;
        th -= step;
        if (std::abs(step) < 1e-12) break;
    }
    return {th, kappa(th)};
}

enum class ExtremalMode { fixed_area, fixed_perimeter };

/// kappa(tri) / kappa(equilateral triangle with the same area or perimeter).
inline double extremal_comparison(const Triangle& tri, ExtremalMode mode) {
    const auto& [a, b, c] = tri.sides();
    double side;  // equilateral side with matching normalization
    if (mode == ExtremalMode::fixed_area) {
        const double area = triangle_geometry(tri).area;
        side = std::sqrt(4.0 * area / std::sqrt(3.0));
    } else {
        side = (a + b + c) / 3.0;
    }
    const double k_eq = haegi_capacity(Triangle(side, side, side)).kappa;
    return haegi_capacity(tri).kappa / k_eq;
}

namespace detail {

inline Complex project_to_triangle(Complex p, const std::array<Complex, 3>& v) {
    auto cross = [](Complex u, Complex w) { return u.real() * w.imag() - u.imag() * w.real(); };
    const double o = cross(v[1] - v[0], v[2] - v[0]);
    bool inside = true;
    for (int i = 0; i < 3; ++i) {
        if (cross(v[(i + 1) % 3] - v[i], p - v[i]) * o < 0.0) inside = false;
    }
    if (inside) return p;
    Complex best{};
    double best_d = std::numeric_limits<double>::max();
    for (int i = 0; i < 3; ++i) {
        const Complex a = v[i], d = v[(i + 1) % 3] - v[i];
        double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / std::norm(d);
        t = std::clamp(t, 0.0, 1.0);
        const Complex q = a + t * d;
        const double dist = std::norm(p - q);
        if (dist < best_d) {
            best_d = dist;
            best = q;
        }
    }
    return best;
}

inline double pairwise_geometric_mean(const std::vector<Complex>& pts) {
    const int n = static_cast<int>(pts.size());
    double logsum = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const double d = std::abs(pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(k)]);
            if (d == 0.0) return 0.0;
            logsum += std::log(d);
        }
    return std::exp(2.0 * logsum / (static_cast<double>(n) * (n - 1)));
}

}  // namespace detail

/// Best-effort lower bound on the n-point maximal geometric mean of pairwise
/// distances (Fekete-type points) by multi-start projected gradient ascent.
inline double transfinite_diameter_estimate(const Triangle& tri, int n, int restarts = 20,
                                            unsigned seed = 12345) {
    if (n < 2) throw domain_error("transfinite_diameter_estimate: requires n >= 2");
    const std::array<Complex, 3> v = tri.vertices_or_canonical();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto random_point = [&] {
        double u = unif(rng), w = unif(rng);
        if (u + w > 1.0) {
            u = 1.0 - u;
            w = 1.0 - w;
        }
        return v[0] + u * (v[1] - v[0]) + w * (v[2] - v[0]);
    };

    double best = 0.0;
    for (int r = 0; r < restarts; ++r) {
        std::vector<Complex> pts(static_cast<size_t>(n));
        if (r == 0) {
            // vertex-seeded start
            for (int j = 0; j < n; ++j)
                pts[static_cast<size_t>(j)] = (j < 3) ? v[static_cast<size_t>(j % 3)]
                                                      : random_point();
        } else {
            for (auto& p : pts) p = random_point();
        }
        double cur = detail::pairwise_geometric_mean(pts);
        double step = 0.1 * std::max({tri.sides()[0], tri.sides()[1], tri.sides()[2]});
        while (step > 1e-9) {
            std::vector<Complex> trial = pts;
            for (int j = 0; j < n; ++j) {
                Complex grad{};
                for (int k = 0; k < n; ++k) {
                    if (k == j) continue;
                    const Complex d = pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(k)];
                    const double nn = std::norm(d);
                    if (nn > 0.0) grad += d / nn;
                }
                trial[static_cast<size_t>(j)] =
                    detail::project_to_triangle(pts[static_cast<size_t>(j)] + step * grad, v);
            }
            const double val = detail::pairwise_geometric_mean(trial);
            if (val > cur) {
                pts = std::move(trial);
                cur = val;
            } else {
                step *= 0.5;
            }
        }
        best = std::max(best, cur);
    }
    return best;
}

}  // namespace capmap
