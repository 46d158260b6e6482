#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "capmap/laurent.hpp"
#include "capmap/sc_exterior.hpp"
#include "capmap/types.hpp"

namespace capmap {

struct GridPoint {
    std::string object_type;  // "circle" or "ray"
    int object_index = 0;
    double t = 0.0;  // circle: angle; ray: radius
    Complex image{};
};

struct GridData {
    std::vector<GridPoint> points;
    std::vector<double> radii;
    double kappa = 0.0;
    Complex center{};
};

/// Images of concentric circles (and optional radial rays) under the exterior
/// map. Radii are evenly spaced in (0, 1) with the innermost floored at 0.08.
inline GridData map_grid(const ExteriorMapSpec& spec, int circles, int rays, int samples,
                         const EvalConfig& cfg = {}) {
    if (circles < 1) throw domain_error("map_grid: circles must be >= 1");
    if (rays < 0) throw domain_error("map_grid: rays must be >= 0");
    if (samples < 64) throw domain_error("map_grid: samples must be >= 64");
    spec.validate();

    GridData data;
    for (int j = 1; j <= circles; ++j)
        data.radii.push_back(std::max(0.08, static_cast<double>(j) / (circles + 1)));

    const LaurentSummary s = laurent_summary(spec, 0.5, 256, 0, cfg);
    data.kappa = s.kappa;
    data.center = s.center;

    const double t_start = std::arg(spec.basepoint);
    for (int j = 0; j < circles; ++j) {
        const double r = data.radii[static_cast<size_t>(j)];
        const std::vector<Complex> f = detail::f_on_circle(spec, r, samples, cfg.abs_tol);
        for (int k = 0; k < samples; ++k) {
            GridPoint p;
            p.object_type = "circle";
            p.object_index = j;
            p.t = t_start + 2.0 * pi * k / samples;
            p.image = spec.scale * f[static_cast<size_t>(k)] + spec.shift;
            data.points.push_back(std::move(p));
        }
    }

    if (rays > 0) {
        const double r_min = data.radii.front();
        const double r_max = std::max(data.radii.back(), 0.95);
        const int per_ray = std::max(16, samples / 8);
        for (int j = 0; j < rays; ++j) {
            const double angle = 2.0 * pi * j / rays;
            for (int k = 0; k < per_ray; ++k) {
                const double r = r_min + (r_max - r_min) * k / (per_ray - 1);
                GridPoint p;
                p.object_type = "ray";
                p.object_index = j;
                p.t = r;
                p.image = evaluate_map(std::polar(r, angle), spec, cfg);
                data.points.push_back(std::move(p));
            }
        }
    }
    return data;
}

}  // namespace capmap
