#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "capmap/types.hpp"

namespace capmap {

/// A triangle given by side lengths, optionally pinned to the plane by its
/// vertices. Side k is opposite vertex k.
class Triangle {
public:
    Triangle(double a, double b, double c) : sides_{a, b, c} { validate_sides(); }

    /// Vertices pin the triangle in the plane; sides are derived.
    explicit Triangle(const std::array<Complex, 3>& vertices) : vertices_(vertices) {
        sides_[0] = std::abs(vertices[2] - vertices[1]);
        sides_[1] = std::abs(vertices[0] - vertices[2]);
        sides_[2] = std::abs(vertices[1] - vertices[0]);
        validate_sides();
    }

    Triangle(double a, double b, double c, const std::array<Complex, 3>& vertices)
        : sides_{a, b, c}, vertices_(vertices) {
        validate_sides();
        const double d0 = std::abs(vertices[2] - vertices[1]);
        const double d1 = std::abs(vertices[0] - vertices[2]);
        const double d2 = std::abs(vertices[1] - vertices[0]);
        const double scale = std::max({a, b, c});
        if (std::abs(d0 - a) > 1e-12 * scale || std::abs(d1 - b) > 1e-12 * scale ||
            std::abs(d2 - c) > 1e-12 * scale)
            throw domain_error("Triangle: vertices do not reproduce the given sides");
    }

    const std::array<double, 3>& sides() const { return sides_; }
    bool has_vertices() const { return vertices_.has_value(); }
    const std::array<Complex, 3>& vertices() const {
        if (!vertices_) throw domain_error("Triangle: no vertices attached");
        return *vertices_;
    }

    /// Vertices if attached; otherwise a canonical placement with vertex 2
    /// at the origin and vertex 1 on the positive real axis.
    std::array<Complex, 3> vertices_or_canonical() const {
        if (vertices_) return *vertices_;
        const double a = sides_[0], b = sides_[1], c = sides_[2];
        // angle at vertex 0 (between sides b and c, opposite a)
        const double cos0 = (b * b + c * c - a * a) / (2.0 * b * c);
        return {Complex{0.0, 0.0}, Complex{c, 0.0},
                b * Complex{cos0, std::sqrt(std::max(0.0, 1.0 - cos0 * cos0))}};
    }

    Triangle scaled(double s) const {
        if (!(s > 0.0)) throw domain_error("Triangle: scale must be positive");
        if (vertices_) {
            std::array<Complex, 3> v = *vertices_;
            for (auto& p : v) p *= s;
            return Triangle(v);
        }
        return Triangle(sides_[0] * s, sides_[1] * s, sides_[2] * s);
    }

private:
    void validate_sides() const {
        const auto& [a, b, c] = sides_;
        if (!(a > 0.0 && b > 0.0 && c > 0.0))
            throw domain_error("Triangle: sides must be positive");
        if (!(a + b > c && b + c > a && c + a > b))
            throw domain_error("Triangle: strict triangle inequality violated");
    }

    std::array<double, 3> sides_{};
    std::optional<std::array<Complex, 3>> vertices_;
};

/// Apex angle of the unit-sided isosceles triangle T_theta.
struct ApexAngle {
    double theta;

    explicit ApexAngle(double t, bool allow_extreme = false) : theta(t) {
        if (!(t > 0.0 && t < pi)) throw domain_error("ApexAngle: requires 0 < theta < pi");
        if (!allow_extreme && !(t > 0.05 && t < pi - 0.05))
            throw domain_error(
                "ApexAngle: theta outside (0.05, pi-0.05); pass allow_extreme to override");
    }
};

/// T_theta: apex at the origin, two unit sides, vertical third side.
inline Triangle isosceles_triangle(ApexAngle apex) {
    const double h = apex.theta / 2.0;
    return Triangle({Complex{0.0, 0.0}, Complex{std::cos(h), -std::sin(h)},
                     Complex{std::cos(h), std::sin(h)}});
}

}  // namespace capmap
