// capmap command-line front-end.
//
// Subcommands: capacity, center, halfdisk, optimize-kappa, map-grid,
// prevertices. Output is human-readable text by default, JSON with --json,
// CSV for grid data with --out ending in .csv.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O failure.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capmap/capmap.hpp"

namespace {

using capmap::Complex;

// Fixed-width scientific-free formatting with 17 significant digits, enough
// to round-trip a double.
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_complex(Complex v) {
    return "{\"re\": " + num(v.real()) + ", \"im\": " + num(v.imag()) + "}";
}

struct Output {
    bool json = false;
    std::string out_path;

    int emit(const std::string& text_body, const std::string& json_body) const {
        std::string payload = json ? "{\"schema\": \"capmap/1\", " + json_body + "}\n"
                                   : text_body;
        if (out_path.empty()) {
            std::cout << payload;
            return 0;
        }
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return 4;
        }
        f << payload;
        return f.good() ? 0 : 4;
    }
};

struct CommonOpts {
    double tol = 1e-12;
    double radius = 0.5;
    int nodes = 512;
    bool degrees = false;

    capmap::EvalConfig config() const {
        capmap::EvalConfig cfg;
        cfg.abs_tol = tol;
        cfg.rel_tol = tol;
        return cfg;
    }
    double angle(double v) const { return degrees ? v * capmap::pi / 180.0 : v; }
};

void add_common(CLI::App* cmd, CommonOpts& c, Output& o) {
    cmd->add_option("--tol", c.tol, "Absolute tolerance for quadrature/series")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--radius", c.radius, "Contour radius for Laurent extraction")
        ->check(CLI::Range(0.05, 1.0));
    cmd->add_option("--nodes", c.nodes, "Starting contour node count (power of two)");
    cmd->add_flag("--degrees", c.degrees, "Interpret angles in degrees");
    cmd->add_flag("--json", o.json, "Emit JSON instead of text");
    cmd->add_option("--out", o.out_path, "Write output to a file");
}

int round_pow2(int n) {
    int p = 64;
    while (p < n && p < (1 << 20)) p *= 2;
    return p;
}

std::optional<capmap::Triangle> triangle_from(const std::vector<double>& sides,
                                              const std::vector<double>& vertices) {
    if (!vertices.empty()) {
        if (vertices.size() != 6) throw capmap::domain_error("--vertices needs 6 numbers");
        std::array<Complex, 3> v = {Complex{vertices[0], vertices[1]},
                                    Complex{vertices[2], vertices[3]},
                                    Complex{vertices[4], vertices[5]}};
        return capmap::Triangle(v);
    }
    if (sides.size() == 3) return capmap::Triangle(sides[0], sides[1], sides[2]);
    return std::nullopt;
}

int run_capacity(const std::vector<double>& sides, const std::vector<double>& vertices,
                 double apex, bool verify_sc, const CommonOpts& c, const Output& o) {
    std::optional<capmap::Triangle> tri = triangle_from(sides, vertices);
    capmap::CapacityResult res{};
    if (apex > 0.0) {
        const capmap::ApexAngle a(c.angle(apex));
        res = capmap::isosceles_capacity(a);
        tri = capmap::isosceles_triangle(a);
    } else if (tri) {
        res = capmap::haegi_capacity(*tri);
    } else {
        std::cerr << "error: provide --sides A B C, --vertices, or --apex THETA\n";
        return 2;
    }

    std::ostringstream text, json;
    text << "kappa (Haegi) = " << num(res.kappa) << "\n";
    json << "\"command\": \"capacity\", \"kappa\": " << num(res.kappa);
    if (verify_sc) {
        capmap::ExteriorMapSpec spec =
            apex > 0.0 ? capmap::make_isosceles_map(capmap::ApexAngle(c.angle(apex)), c.config())
                       : capmap::make_general_map(*tri, c.config());
        const capmap::LaurentSummary ls =
            capmap::laurent_summary(spec, c.radius, round_pow2(c.nodes), 0, c.config());
        text << "kappa (SC Laurent) = " << num(ls.kappa) << "\n"
             << "difference = " << num(std::abs(ls.kappa - res.kappa)) << "\n";
        json << ", \"kappa_sc\": " << num(ls.kappa)
             << ", \"difference\": " << num(std::abs(ls.kappa - res.kappa));
    }
    return o.emit(text.str(), json.str());
}

int run_center(const std::vector<double>& sides, const std::vector<double>& vertices, double apex,
               bool closed_form, bool unit_legs_right, const CommonOpts& c, const Output& o) {
    std::ostringstream text, json;
    if (unit_legs_right) {
        const Complex ctr = capmap::outer_center_unit_legs_right_triangle(c.config());
        text << "outer center = " << num(ctr.real()) << " + " << num(ctr.imag()) << "i\n";
        json << "\"command\": \"center\", \"center\": " << json_complex(ctr);
        return o.emit(text.str(), json.str());
    }

    capmap::ExteriorMapSpec spec;
    if (apex > 0.0) {
        spec = capmap::make_isosceles_map(capmap::ApexAngle(c.angle(apex)), c.config());
    } else if (auto tri = triangle_from(sides, vertices)) {
        spec = capmap::make_general_map(*tri, c.config());
    } else {
        std::cerr << "error: provide --sides/--vertices, --apex, or --unit-legs-right\n";
        return 2;
    }
    const capmap::LaurentSummary ls =
        capmap::laurent_summary(spec, c.radius, round_pow2(c.nodes), 0, c.config());
    text << "outer center = " << num(ls.center.real()) << " + " << num(ls.center.imag())
         << "i\nkappa = " << num(ls.kappa)
         << "\nerror estimate = " << num(ls.error_estimate) << "\n";
    json << "\"command\": \"center\", \"center\": " << json_complex(ls.center)
         << ", \"kappa\": " << num(ls.kappa)
         << ", \"error_estimate\": " << num(ls.error_estimate);
    if (closed_form && apex > 0.0) {
        const Complex lam = capmap::closed_form_lambda_right_isosceles(c.config());
        text << "closed-form lambda (right isosceles) = " << num(lam.real()) << "\n";
        json << ", \"lambda_closed_form\": " << json_complex(lam);
    }
    return o.emit(text.str(), json.str());
}

int run_halfdisk(bool inner_only, bool outer_only, const Output& o) {
    std::ostringstream text, json;
    json << "\"command\": \"halfdisk\"";
    const bool both = !inner_only && !outer_only;
    if (inner_only || both) {
        const auto ic = capmap::halfdisk::inner_center();
        text << "inner center y0 = " << num(ic.y0)
             << "\nmax inner radius = " << num(ic.max_inner_radius) << "\n";
        json << ", \"y0\": " << num(ic.y0)
             << ", \"max_inner_radius\": " << num(ic.max_inner_radius);
    }
    if (outer_only || both) {
        const auto os = capmap::halfdisk::outer_summary_halfdisk();
        text << "outer radius = " << num(os.outer_radius) << "\nouter center = "
             << num(os.outer_center.real()) << " + " << num(os.outer_center.imag()) << "i\n";
        json << ", \"outer_radius\": " << num(os.outer_radius)
             << ", \"outer_center\": " << json_complex(os.outer_center);
    }
    return o.emit(text.str(), json.str());
}

int run_optimize(const Output& o) {
    const auto [theta, kappa] = capmap::maximize_isosceles_capacity();
    std::ostringstream text, json;
    text << "theta* = " << num(theta) << "\nkappa(theta*) = " << num(kappa) << " (derived)\n";
    json << "\"command\": \"optimize-kappa\", \"theta_star\": " << num(theta)
         << ", \"kappa_star\": " << num(kappa);
    return o.emit(text.str(), json.str());
}

int run_prevertices(const std::vector<double>& sides, const std::vector<double>& vertices,
                    double apex, const CommonOpts& c, const Output& o) {
    std::array<double, 3> mu{};
    std::array<Complex, 3> a{};
    if (apex > 0.0) {
        const capmap::ApexAngle ax(c.angle(apex));
        mu = capmap::isosceles_exponents(ax);
        a = capmap::isosceles_prevertices(ax);
    } else if (auto tri = triangle_from(sides, vertices)) {
        mu = capmap::exponents_from_triangle(*tri);
        a = capmap::solve_prevertices(mu, Complex{1.0, 0.0});
    } else {
        std::cerr << "error: provide --sides A B C, --vertices, or --apex THETA\n";
        return 2;
    }
    std::ostringstream text, json;
    json << "\"command\": \"prevertices\", \"mu\": [" << num(mu[0]) << ", " << num(mu[1]) << ", "
         << num(mu[2]) << "], \"prevertices\": [";
    for (int k = 0; k < 3; ++k) {
        text << "mu" << k + 1 << " = " << num(mu[k]) << "   a" << k + 1 << " = "
             << num(a[k].real()) << " + " << num(a[k].imag()) << "i\n";
        json << (k ? ", " : "") << json_complex(a[k]);
    }
    json << "]";
    return o.emit(text.str(), json.str());
}

int run_grid(const std::vector<double>& sides, const std::vector<double>& vertices, double apex,
             bool unit_legs_right, int circles, int rays, int samples, const CommonOpts& c,
             const Output& o) {
    capmap::ExteriorMapSpec spec;
    if (unit_legs_right) {
        std::array<Complex, 3> v = {Complex{0, 0}, Complex{1, 0}, Complex{0, 1}};
        spec = capmap::make_general_map(capmap::Triangle(v), c.config());
    } else if (apex > 0.0) {
        spec = capmap::make_isosceles_map(capmap::ApexAngle(c.angle(apex)), c.config());
    } else if (auto tri = triangle_from(sides, vertices)) {
        spec = capmap::make_general_map(*tri, c.config());
    } else {
        std::cerr << "error: provide --sides/--vertices, --apex, or --unit-legs-right\n";
        return 2;
    }
    const capmap::GridData grid = capmap::map_grid(spec, circles, rays, samples, c.config());

    std::ostringstream body;
    if (o.json) {
        body << "{\"schema\": \"capmap/1\", \"command\": \"map-grid\", \"kappa\": "
             << num(grid.kappa) << ", \"center\": " << json_complex(grid.center)
             << ", \"radii\": [";
        for (size_t j = 0; j < grid.radii.size(); ++j)
            body << (j ? ", " : "") << num(grid.radii[j]);
        body << "], \"points\": [";
        for (size_t j = 0; j < grid.points.size(); ++j) {
            const auto& p = grid.points[j];
            body << (j ? ", " : "") << "{\"object_type\": \"" << p.object_type
                 << "\", \"object_index\": " << p.object_index << ", \"t\": " << num(p.t)
                 << ", \"re\": " << num(p.image.real()) << ", \"im\": " << num(p.image.imag())
                 << "}";
        }
        body << "]}\n";
    } else {
        body << "# kappa=" << num(grid.kappa) << " center=" << num(grid.center.real()) << "+"
             << num(grid.center.imag()) << "i radii=";
        for (size_t j = 0; j < grid.radii.size(); ++j)
            body << (j ? "," : "") << num(grid.radii[j]);
        body << "\nobject_type,object_index,t,re,im\n";
        for (const auto& p : grid.points)
            body << p.object_type << "," << p.object_index << "," << num(p.t) << ","
                 << num(p.image.real()) << "," << num(p.image.imag()) << "\n";
    }
    if (o.out_path.empty()) {
        std::cout << body.str();
        return 0;
    }
    std::ofstream f(o.out_path);
    if (!f) {
        std::cerr << "error: cannot open output file: " << o.out_path << "\n";
        return 4;
    }
    f << body.str();
    return f.good() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capmap: exterior conformal maps, logarithmic capacity, and outer conformal "
                 "centers of triangles"};
    app.require_subcommand(1);

    CommonOpts c;
    Output o;

    std::vector<double> sides, vertices;
    double apex = -1.0;
    bool verify_sc = false, closed_form = false, unit_legs_right = false;
    bool inner_only = false, outer_only = false;
    int circles = 10, rays = 0, samples = 256;

    auto* cap = app.add_subcommand("capacity", "Logarithmic capacity (outer radius)");
    cap->add_option("--sides", sides, "Three side lengths")->expected(3);
    cap->add_option("--vertices", vertices, "Three vertices as re im triples")->expected(6);
    cap->add_option("--apex", apex, "Isosceles apex angle");
    cap->add_flag("--verify-sc", verify_sc, "Cross-check via SC Laurent extraction");
    add_common(cap, c, o);

    auto* cen = app.add_subcommand("center", "Outer conformal center");
    cen->add_option("--sides", sides, "Three side lengths")->expected(3);
    cen->add_option("--vertices", vertices, "Three vertices as re im triples")->expected(6);
    cen->add_option("--apex", apex, "Isosceles apex angle");
    cen->add_flag("--closed-form", closed_form, "Also print the closed-form lambda");
    cen->add_flag("--unit-legs-right", unit_legs_right, "Right triangle with legs 0-1 and 0-i");
    add_common(cen, c, o);

    auto* hd = app.add_subcommand("halfdisk", "Half-disk centers and radii");
    hd->add_flag("--inner", inner_only, "Inner center block only");
    hd->add_flag("--outer", outer_only, "Outer summary block only");
    add_common(hd, c, o);

    auto* opt = app.add_subcommand("optimize-kappa", "Apex angle maximizing kappa(theta)");
    add_common(opt, c, o);

    auto* pv = app.add_subcommand("prevertices", "Exponents and prevertices of a triangle");
    pv->add_option("--sides", sides, "Three side lengths")->expected(3);
    pv->add_option("--vertices", vertices, "Three vertices as re im triples")->expected(6);
    pv->add_option("--apex", apex, "Isosceles apex angle");
    add_common(pv, c, o);

    auto* gr = app.add_subcommand("map-grid", "Image grid of circles and rays");
    gr->add_option("--sides", sides, "Three side lengths")->expected(3);
    gr->add_option("--vertices", vertices, "Three vertices as re im triples")->expected(6);
    gr->add_option("--apex", apex, "Isosceles apex angle");
    gr->add_flag("--unit-legs-right", unit_legs_right, "Right triangle with legs 0-1 and 0-i");
    gr->add_option("--circles", circles, "Number of concentric circles");
    gr->add_option("--rays", rays, "Number of radial rays");
    gr->add_option("--samples", samples, "Samples per circle");
    add_common(gr, c, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap->parsed()) return run_capacity(sides, vertices, apex, verify_sc, c, o);
        if (cen->parsed())
            return run_center(sides, vertices, apex, closed_form, unit_legs_right, c, o);
        if (hd->parsed()) return run_halfdisk(inner_only, outer_only, o);
        if (opt->parsed()) return run_optimize(o);
        if (pv->parsed()) return run_prevertices(sides, vertices, apex, c, o);
        if (gr->parsed())
            return run_grid(sides, vertices, apex, unit_legs_right, circles, rays, samples, c, o);
    } catch (const capmap::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
