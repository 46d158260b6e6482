#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "capmap/laurent.hpp"
#include "capmap/quadrature.hpp"
#include "capmap/triangle.hpp"
#include "capmap/types.hpp"

namespace capmap {

/// mu_k = 1 - (interior angle at vertex k)/pi; exterior angle is pi(1+mu_k).
inline std::array<double, 3> exponents_from_triangle(const Triangle& tri) {
    const auto& [a, b, c] = tri.sides();
    auto angle = [](double u, double v, double w) {
        const double cosv = (v * v + w * w - u * u) / (2.0 * v * w);
        if (!(cosv > -1.0 && cosv < 1.0))
            throw domain_error("exponents_from_triangle: degenerate triangle");
        return std::acos(cosv);
    };
    return {1.0 - angle(a, b, c) / pi, 1.0 - angle(b, a, c) / pi, 1.0 - angle(c, a, b) / pi};
}

/// Closed-form prevertices for T_theta with a1 = -1:
/// a2 = (pi - theta + 2i sqrt(pi theta)) / (pi + theta), a3 = conj(a2).
inline std::array<Complex, 3> isosceles_prevertices(ApexAngle apex) {
    const double th = apex.theta;
    const Complex a2{(pi - th) / (pi + th), 2.0 * std::sqrt(pi * th) / (pi + th)};
    return {Complex{-1.0, 0.0}, a2, std::conj(a2)};
}

inline std::array<double, 3> isosceles_exponents(ApexAngle apex) {
    const double th = apex.theta;
    return {(pi - th) / pi, (pi + th) / (2.0 * pi), (pi + th) / (2.0 * pi)};
}

/// Which of the two mirror-image prevertex configurations to return.
/// `ccw` is the one whose exterior map traverses the target polygon
/// clockwise while the circle is walked counterclockwise, i.e. the correct
/// choice for counterclockwise-listed target vertices.
enum class Orientation { ccw, cw };

namespace detail {

inline double residue_norm(const std::array<double, 3>& mu, const std::array<Complex, 3>& a) {
    return std::abs(mu[0] / a[0] + mu[1] / a[1] + mu[2] / a[2]);
}

inline Orientation classify_orientation(const std::array<Complex, 3>& a) {
    const double p1 = std::arg(a[0]);
    auto rel = [&](Complex w) {
        double d = std::arg(w) - p1;
        while (d <= 0.0) d += 2.0 * pi;
        while (d > 2.0 * pi) d -= 2.0 * pi;
        return d;
    };
    // ccw circular order (a1, a3, a2) pairs with ccw-listed vertices
    return rel(a[2]) < rel(a[1]) ? Orientation::ccw : Orientation::cw;
}

inline std::array<Complex, 3> reflect_about_fixed(const std::array<Complex, 3>& a) {
    // the mirror solution: conjugate, then rotate a1 back onto itself
    const Complex rho = a[0] / std::conj(a[0]);
    return {a[0], rho * std::conj(a[1]), rho * std::conj(a[2])};
}

}  // namespace detail

/// Solve mu1/a1 + mu2/a2 + mu3/a3 = 0 for a2 = e^{i phi2}, a3 = e^{i phi3}
/// with a1 fixed, by damped Newton on (phi2, phi3). Residual <= 1e-12.
inline std::array<Complex, 3> solve_prevertices(const std::array<double, 3>& mu, Complex fixed,
                                                Orientation ori = Orientation::ccw) {
    for (double m : mu)
        if (!(m > 0.0 && m < 1.0))
            throw domain_error("solve_prevertices: exponents must lie in (0, 1)");
    if (std::abs(std::abs(fixed) - 1.0) > 1e-12)
        throw domain_error("solve_prevertices: |fixed| must be 1");

    // initialize from the isosceles closed form sharing mu1, rotated so that
    // its a1 = -1 lands on `fixed`
    const double theta0 = std::min(std::max(pi * (1.0 - mu[0]), 0.06), pi - 0.06);
    const auto iso = isosceles_prevertices(ApexAngle(theta0, true));
    const Complex rot = -fixed;  // maps -1 to fixed
    double phi2 = std::arg(rot * iso[1]);
    double phi3 = std::arg(rot * iso[2]);

    const Complex base = mu[0] / fixed;
    auto residual = [&](double p2, double p3) {
        return base + mu[1] * std::exp(Complex{0.0, -p2}) + mu[2] * std::exp(Complex{0.0, -p3});
    };

    Complex r = residual(phi2, phi3);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        if (std::abs(r) <= 1e-13) {
            converged = true;
            break;
        }
        const Complex d2 = Complex{0.0, -1.0} * mu[1] * std::exp(Complex{0.0, -phi2});
        const Complex d3 = Complex{0.0, -1.0} * mu[2] * std::exp(Complex{0.0, -phi3});
        const double det = d2.real() * d3.imag() - d2.imag() * d3.real();
        if (std::abs(det) < 1e-300)
            throw convergence_error("solve_prevertices: singular Newton system");
        const double s2 = (-r.real() * d3.imag() + r.imag() * d3.real()) / det;
        const double s3 = (-d2.real() * r.imag() + d2.imag() * r.real()) / det;
        double damp = 1.0;
        for (int h = 0; h < 40; ++h) {
            const Complex rt = residual(phi2 + damp * s2, phi3 + damp * s3);
            if (std::abs(rt) < std::abs(r)) {
                phi2 += damp * s2;
                phi3 += damp * s3;
                r = rt;
                break;
            }
            damp *= 0.5;
            if (h == 39) throw convergence_error("solve_prevertices: damping stalled");
        }
    }
    if (!converged && std::abs(r) > 1e-12)
        throw convergence_error("solve_prevertices: Newton did not converge");

    std::array<Complex, 3> a{fixed, std::exp(Complex{0.0, phi2}), std::exp(Complex{0.0, phi3})};
    if (detail::classify_orientation(a) != ori) a = detail::reflect_about_fixed(a);
    if (detail::residue_norm(mu, a) > 1e-12)
        throw convergence_error("solve_prevertices: residue constraint not met");
    return a;
}

/// Piecewise path in the closed unit disk: radial segments and circular arcs.
struct PathSegment {
    enum class Kind { radial, arc };
    Kind kind = Kind::radial;
    double angle = 0.0;   // radial: fixed polar angle
    double r0 = 0.0;      // radial: start radius / arc: (constant) radius
    double r1 = 0.0;      // radial: end radius
    double t0 = 0.0;      // arc: start angle
    double t1 = 0.0;      // arc: end angle (signed sweep)

    Complex point(double u) const {
        if (kind == Kind::radial) return std::polar(r0 + u * (r1 - r0), angle);
        return std::polar(r0, t0 + u * (t1 - t0));
    }
    Complex derivative(double u) const {
        if (kind == Kind::radial) return std::polar(r1 - r0, angle);
        const double t = t0 + u * (t1 - t0);
        return Complex{0.0, t1 - t0} * std::polar(r0, t);
    }
    Complex start() const { return point(0.0); }
    Complex end() const { return point(1.0); }
};

struct PathSpec {
    std::vector<PathSegment> segments;
    Complex start{};
    Complex end{};
    double min_clearance = 0.05;
};

/// Basepoint-to-z path: radial inward from z0 to r* = max(|z|, 0.5), arc at
/// r* to arg z, radial to z. Never approaches the origin closer than the
/// clearance.
inline PathSpec build_path(Complex z, Complex z0, double min_clearance = 0.05) {
    if (std::abs(std::abs(z0) - 1.0) > 1e-12)
        throw domain_error("build_path: basepoint must lie on the unit circle");
    const double rz = std::abs(z);
    if (rz < min_clearance) throw domain_error("build_path: z too close to the origin");
    if (rz > 1.0 + 1e-12) throw domain_error("build_path: z outside the closed disk");

    PathSpec path;
    path.start = z0;
    path.end = z;
    path.min_clearance = min_clearance;
    if (std::abs(z - z0) == 0.0) return path;

    const double t_start = std::arg(z0);
    const double t_end = std::arg(z);
    const double r_mid = std::max(rz, 0.5);

    if (r_mid < 1.0) {
        PathSegment in;
        in.kind = PathSegment::Kind::radial;
        in.angle = t_start;
        in.r0 = 1.0;
        in.r1 = r_mid;
        path.segments.push_back(in);
    }
    double sweep = t_end - t_start;
    while (sweep > pi) sweep -= 2.0 * pi;
    while (sweep < -pi) sweep += 2.0 * pi;
    if (sweep != 0.0) {
        PathSegment arc;
        arc.kind = PathSegment::Kind::arc;
        arc.r0 = r_mid;
        arc.t0 = t_start;
        arc.t1 = t_start + sweep;
        path.segments.push_back(arc);
    }
    if (rz != r_mid) {
        PathSegment out;
        out.kind = PathSegment::Kind::radial;
        out.angle = t_end;
        out.r0 = r_mid;
        out.r1 = rz;
        path.segments.push_back(out);
    }
    return path;
}

/// Everything needed to evaluate the exterior map g = scale * f + shift.
struct ExteriorMapSpec {
    std::array<Complex, 3> prevertices{};
    std::array<double, 3> exponents{};
    Complex basepoint{};
    Complex scale{1.0, 0.0};
    Complex shift{};
    std::array<Complex, 3> target_vertices{};
    std::array<double, 3> base_args{};  // continuation reference at the basepoint

    void validate() const {
        double musum = 0.0;
        for (int k = 0; k < 3; ++k) {
            if (std::abs(std::abs(prevertices[k]) - 1.0) > 1e-12)
                throw domain_error("ExteriorMapSpec: prevertices must lie on the unit circle");
            if (!(exponents[k] > 0.0 && exponents[k] < 1.0))
                throw domain_error("ExteriorMapSpec: exponents must lie in (0, 1)");
            musum += exponents[k];
        }
        if (std::abs(musum - 2.0) > 1e-12)
            throw domain_error("ExteriorMapSpec: exponents must sum to 2");
        if (detail::residue_norm(exponents, prevertices) > 1e-10)
            throw domain_error("ExteriorMapSpec: residue constraint violated");
    }
};

namespace detail {

inline std::array<double, 3> reference_args(const std::array<Complex, 3>& a, Complex z0) {
    std::array<double, 3> args{};
    for (int k = 0; k < 3; ++k) {
        const Complex d = z0 - a[k];
        // at the basepoint prevertex itself, take the limit along the inward radius
        args[k] = (std::abs(d) < 1e-14) ? std::arg(-z0) : std::arg(d);
    }
    return args;
}

/// Carries the continued argument of each factor (zeta - a_k)^{mu_k} along a
/// path. Arguments advance by less than pi/2 per step; larger jumps are a
/// step-size violation, reported as branch_error for the caller to subdivide.
class BranchTracker {
public:
    BranchTracker(const std::array<Complex, 3>& prevertices, const std::array<double, 3>& mu,
                  Complex basepoint, const std::array<double, 3>& base_args)
        : a_(prevertices), mu_(mu), anchor_(basepoint), args_(base_args) {
        for (int k = 0; k < 3; ++k) dirs_[k] = direction(anchor_, k);
    }

    Complex anchor() const { return anchor_; }

    /// Argument increment of factor k from the anchor to zeta.
    double delta_arg(Complex zeta, int k) const {
        const Complex d = zeta - a_[k];
        if (std::abs(d) == 0.0) return 0.0;
        return std::arg(d / dirs_[k]);
    }

    bool step_safe(Complex zeta) const {
        for (int k = 0; k < 3; ++k)
            if (std::abs(delta_arg(zeta, k)) >= 0.5 * pi) return false;
        return true;
    }

    void advance(Complex zeta) {
        for (int k = 0; k < 3; ++k) {
            const double d = delta_arg(zeta, k);
            if (std::abs(d) >= 0.5 * pi)
                throw branch_error("BranchTracker: argument step exceeds pi/2");
            args_[k] += d;
        }
        anchor_ = zeta;
        for (int k = 0; k < 3; ++k) dirs_[k] = direction(anchor_, k);
    }

    /// Integrand (zeta-a1)^{mu1} (zeta-a2)^{mu2} (zeta-a3)^{mu3} / zeta^2 with
    /// branch continued from the anchor; zeta must stay within the safe step.
    Complex integrand(Complex zeta) const {
        double log_mod = 0.0, arg_sum = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double m = std::abs(zeta - a_[k]);
            if (m == 0.0) return Complex{};  // mu_k > 0: the factor vanishes
            log_mod += mu_[k] * std::log(m);
            arg_sum += mu_[k] * (args_[k] + delta_arg(zeta, k));
        }
        return std::polar(std::exp(log_mod), arg_sum) / (zeta * zeta);
    }

private:
    Complex direction(Complex p, int k) const {
        const Complex d = p - a_[k];
        return (std::abs(d) < 1e-14) ? std::polar(1.0, args_[k]) : d;
    }

    std::array<Complex, 3> a_;
    std::array<double, 3> mu_;
    Complex anchor_;
    std::array<double, 3> args_;
    std::array<Complex, 3> dirs_;
};

/// Integrate one path piece [ua, ub] (parameter space) with the tracker
/// anchored at seg.point(ua); advances the tracker to seg.point(ub).
/// Subdivides until every endpoint step satisfies the tracker invariant.
inline Complex integrate_piece(BranchTracker& tracker, const PathSegment& seg, double ua,
                               double ub, double tol, int depth = 0) {
    const Complex zb = seg.point(ub);
    if (!tracker.step_safe(zb)) {
        if (depth > 60) throw branch_error("integrate_piece: subdivision limit");
        const double um = 0.5 * (ua + ub);
        Complex v = integrate_piece(tracker, seg, ua, um, 0.5 * tol, depth + 1);
        v += integrate_piece(tracker, seg, um, ub, 0.5 * tol, depth + 1);
        return v;
    }
    const Complex v =
        adaptive_gk([&](double u) { return tracker.integrand(seg.point(u)) * seg.derivative(u); },
                    ua, ub, tol)
            .value;
    tracker.advance(zb);
    return v;
}

/// Integrate a whole segment. When the segment starts at the map basepoint the
/// integrand has an algebraic singular derivative there; grade the first
/// subintervals geometrically (ratio 0.25, 8 levels).
inline Complex integrate_segment(BranchTracker& tracker, const PathSegment& seg, double tol,
                                 bool graded_at_start) {
    Complex total{};
    double u = 0.0;
    if (graded_at_start) {
        double edge = std::pow(0.25, 8);
        total += integrate_piece(tracker, seg, 0.0, edge, tol / 10.0);
        u = edge;
        while (edge < 0.25) {
            const double next = edge * 4.0;
            total += integrate_piece(tracker, seg, u, next, tol / 10.0);
            u = next;
            edge = next;
        }
    }
    total += integrate_piece(tracker, seg, u, 1.0, tol);
    return total;
}

inline BranchTracker make_tracker(const ExteriorMapSpec& spec) {
    return BranchTracker(spec.prevertices, spec.exponents, spec.basepoint, spec.base_args);
}

}  // namespace detail

/// The Schwarz-Christoffel integral f(z) from the basepoint to z along a
/// clearance-respecting path, with continuously tracked branches.
inline Complex f_numeric(Complex z, const ExteriorMapSpec& spec, const EvalConfig& cfg = {}) {
    cfg.validate();
    const PathSpec path = build_path(z, spec.basepoint);
    detail::BranchTracker tracker = detail::make_tracker(spec);
    Complex total{};
    bool first = true;
    for (const auto& seg : path.segments) {
        const bool graded = first && std::abs(seg.start() - spec.basepoint) < 1e-14;
        total += detail::integrate_segment(tracker, seg, cfg.abs_tol, graded);
        first = false;
    }
    return total;
}

/// g(z) = scale * f(z) + shift.
inline Complex evaluate_map(Complex z, const ExteriorMapSpec& spec, const EvalConfig& cfg = {}) {
    return spec.scale * f_numeric(z, spec, cfg) + spec.shift;
}

namespace detail {

/// f at the n points r e^{i(t_start + 2 pi j / n)}, computed by marching the
/// integral around the circle (one radial approach plus n arc pieces).
inline std::vector<Complex> f_on_circle(const ExteriorMapSpec& spec, double r, int n,
                                        double tol) {
    const double t_start = std::arg(spec.basepoint);
    BranchTracker tracker = make_tracker(spec);

    PathSegment approach;
    approach.kind = PathSegment::Kind::radial;
    approach.angle = t_start;
    approach.r0 = 1.0;
    approach.r1 = r;
    Complex f = integrate_segment(tracker, approach, tol, true);

    std::vector<Complex> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        out[static_cast<size_t>(j)] = f;
        PathSegment arc;
        arc.kind = PathSegment::Kind::arc;
        arc.r0 = r;
        arc.t0 = t_start + 2.0 * pi * j / n;
        arc.t1 = t_start + 2.0 * pi * (j + 1) / n;
        f += integrate_piece(tracker, arc, 0.0, 1.0, tol);
    }
    return out;
}

}  // namespace detail

/// Laurent data of g near its pole: kappa = |c_{-1}|, center = c_0, plus
/// optional higher coefficients, from trapezoid moments on |z| = r. The node
/// count doubles until kappa and center agree to the settle tolerance.
inline LaurentSummary laurent_summary(const ExteriorMapSpec& spec, double r = 0.5, int n = 256,
                                      int n_higher = 0, const EvalConfig& cfg = {},
                                      double settle_tol = 1e-10) {
    cfg.validate();
    spec.validate();
    if (!(r > 0.05 && r < 1.0)) throw domain_error("laurent_summary: requires 0.05 < r < 1");
    if (n < 64 || (n & (n - 1)) != 0)
        throw domain_error("laurent_summary: n must be a power of two >= 64");

    const double t_start = std::arg(spec.basepoint);
    auto compute = [&](int count) {
        std::vector<Complex> f = detail::f_on_circle(spec, r, count, cfg.abs_tol);
        for (auto& v : f) v = spec.scale * v + spec.shift;
        return detail::laurent_from_samples(f, r, t_start, n_higher);
    };

    LaurentSummary prev = compute(n);
    for (int d = 0; d < 6; ++d) {
        n *= 2;
        LaurentSummary cur = compute(n);
        const double diff =
            std::abs(cur.kappa - prev.kappa) + std::abs(cur.center - prev.center);
        cur.error_estimate = diff;
        if (diff < settle_tol) return cur;
        prev = cur;
    }
    throw convergence_error("laurent_summary: node doubling did not settle");
}

/// f at a prevertex, taken as the boundary value at (1 - delta) a_k.
inline Complex f_at_prevertex(const ExteriorMapSpec& spec, int k, const EvalConfig& cfg = {},
                              double delta = 1e-6) {
    return f_numeric((1.0 - delta) * spec.prevertices[static_cast<size_t>(k)], spec, cfg);
}

/// Exterior map of T_theta: closed-form prevertices, basepoint -1, and the
/// negative real scale -2 sin(theta/2) / (Im f(a2) - Im f(a3)).
inline ExteriorMapSpec make_isosceles_map(ApexAngle apex, const EvalConfig& cfg = {}) {
    const double th = apex.theta;
    ExteriorMapSpec spec;
    spec.prevertices = isosceles_prevertices(apex);
    spec.exponents = isosceles_exponents(apex);
    spec.basepoint = Complex{-1.0, 0.0};
    spec.base_args = detail::reference_args(spec.prevertices, spec.basepoint);
    const double h = th / 2.0;
    spec.target_vertices = {Complex{0.0, 0.0}, Complex{std::cos(h), -std::sin(h)},
                            Complex{std::cos(h), std::sin(h)}};
    const Complex f2 = f_at_prevertex(spec, 1, cfg);
    const Complex f3 = f_at_prevertex(spec, 2, cfg);
    spec.scale = Complex{-2.0 * std::sin(h) / (f2.imag() - f3.imag()), 0.0};
    spec.shift = Complex{};
    spec.validate();
    return spec;
}

/// Exterior map of an arbitrary triangle with counterclockwise-listed
/// vertices: solved prevertices, complex scale and shift matching the first
/// two vertices, third vertex as a residual check.
inline ExteriorMapSpec make_general_map(const Triangle& tri, const EvalConfig& cfg = {},
                                        double vertex_tol = 1e-6) {
    const std::array<Complex, 3> v = tri.vertices_or_canonical();
    auto cross = [](Complex u, Complex w) { return u.real() * w.imag() - u.imag() * w.real(); };
    if (cross(v[1] - v[0], v[2] - v[0]) <= 0.0)
        throw domain_error("make_general_map: vertices must be listed counterclockwise");

    const std::array<double, 3> mu = exponents_from_triangle(tri);

    auto attempt = [&](Orientation ori) {
        ExteriorMapSpec spec;
        spec.prevertices = solve_prevertices(mu, Complex{1.0, 0.0}, ori);
        spec.exponents = mu;
        spec.basepoint = spec.prevertices[0];
        spec.base_args = detail::reference_args(spec.prevertices, spec.basepoint);
        spec.target_vertices = v;
        const Complex f1 = f_at_prevertex(spec, 0, cfg);
        const Complex f2 = f_at_prevertex(spec, 1, cfg);
        const Complex f3 = f_at_prevertex(spec, 2, cfg);
        spec.scale = (v[1] - v[0]) / (f2 - f1);
        spec.shift = v[0] - spec.scale * f1;
        const double residual = std::abs(spec.scale * f3 + spec.shift - v[2]);
        return std::make_pair(spec, residual);
    };

    const double size = std::max({std::abs(v[1] - v[0]), std::abs(v[2] - v[0])});
    auto [spec, residual] = attempt(Orientation::ccw);
    if (residual > vertex_tol * size) {
        auto [spec2, residual2] = attempt(Orientation::cw);
        if (residual2 < residual) {
            spec = spec2;
            residual = residual2;
        }
    }
    if (residual > vertex_tol * size)
        throw convergence_error("make_general_map: third-vertex residual above tolerance");
    spec.validate();
    return spec;
}

}  // namespace capmap
