#include <cmath>
#include <random>

#include <catch_amalgamated.hpp>

#include "capmap/halfdisk.hpp"

using namespace capmap;
using namespace capmap::halfdisk;

namespace {

Complex random_interior(std::mt19937& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (;;) {
        const Complex z{2.0 * unif(rng) - 1.0, unif(rng)};
        if (contains(z, 1e-3)) return z;
    }
}

}  // namespace

TEST_CASE("ell basic values") {
    // ell(i/2) = 2 ln((1+i/2)/(1-i/2)); imaginary part 4 arctan(1/2)
    const Complex v = ell(Complex{0.0, 0.5});
    CHECK(v.real() == Catch::Approx(0.0).margin(1e-14));
    CHECK(v.imag() == Catch::Approx(4.0 * std::atan(0.5)).epsilon(1e-13));
    // ell -> 0 toward the origin
    CHECK(std::abs(ell(Complex{0.0, 1e-8})) < 1e-6);
}

TEST_CASE("ell maps into the strip of width pi") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Complex v = ell(random_interior(rng));
        CHECK(v.imag() > 0.0);
        CHECK(v.imag() < pi);
    }
    CHECK_THROWS_AS(ell(Complex{0.5, -0.1}), domain_error);
    CHECK_THROWS_AS(ell(Complex{2.0, 0.5}), domain_error);
}

TEST_CASE("green_map properties") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Complex w = random_interior(rng);
        const Complex z = random_interior(rng);
        CHECK(std::abs(green_map(w, w)) < 1e-13);
        CHECK(std::abs(green_map(w, z)) < 1.0);
    }
    // Green's function vanishes at the boundary
    const Complex w{0.2, 0.4};
    for (Complex zb : {Complex{0.3, 1e-3}, std::polar(1.0 - 1e-3, 1.0), Complex{-0.7, 1e-3}}) {
        CHECK(std::abs(std::log(std::abs(green_map(w, zb)))) < 5e-3);
    }
}

TEST_CASE("h_general and h_axis") {
    CHECK(h_axis(0.5) == Catch::Approx(5.0 / 3.0).epsilon(1e-14));
    const double y0 = std::sqrt(-2.0 + std::sqrt(5.0));
    CHECK(h_axis(y0) == Catch::Approx(1.0 / std::sqrt(-22.0 + 10.0 * std::sqrt(5.0)))
                            .epsilon(1e-13));
    for (double y : {0.2, 0.5, 0.8})
        CHECK(h_general(Complex{0.0, y}) == Catch::Approx(h_axis(y)).epsilon(1e-12));
    // poles at the ends
    CHECK(h_axis(1e-6) > 1e5);
    CHECK(h_axis(1.0 - 1e-6) > 1e5);
    CHECK_THROWS_AS(h_axis(0.0), domain_error);
    CHECK_THROWS_AS(h_axis(1.0), domain_error);
    // h grows toward the boundary along a ray
    const double h1 = h_general(std::polar(0.3, 1.2));
    const double h2 = h_general(std::polar(0.7, 1.2));
    const double h3 = h_general(std::polar(0.95, 1.2));
    CHECK(h1 < h2);
    CHECK(h2 < h3);
}

TEST_CASE("h_general equals h_axis on the axis, 20 points") {
    for (int i = 1; i <= 20; ++i) {
        const double y = i / 21.0;
        CHECK(h_general(Complex{0.0, y}) == Catch::Approx(h_axis(y)).epsilon(1e-12));
    }
}

TEST_CASE("inner_center matches the closed form") {
    const auto ic = inner_center();
    const double y0 = std::sqrt(-2.0 + std::sqrt(5.0));
    CHECK(std::abs(ic.y0 - y0) < 1e-10);
    CHECK(ic.max_inner_radius ==
          Catch::Approx(std::sqrt(-22.0 + 10.0 * std::sqrt(5.0))).epsilon(1e-12));
    CHECK(ic.max_inner_radius == Catch::Approx(1.0 / ic.h_at_y0).epsilon(1e-14));
}

TEST_CASE("m_of_z finite on interior points") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> mag(0.05, 0.95);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    for (int i = 0; i < 100; ++i) {
        const Complex m = m_of_z(std::polar(mag(rng), ang(rng)));
        CHECK(is_finite(m));
    }
    CHECK_THROWS_AS(m_of_z(Complex{}), pole_error);
}

TEST_CASE("exterior map half-disk Laurent behavior") {
    // z g(z) -> 4/(3 sqrt 3) as z -> 0
    for (double t : {0.4, 1.7, 3.0, 5.1}) {
        const Complex z = std::polar(1e-4, t);
        CHECK(std::abs(z * exterior_map_halfdisk(z) - Complex{4.0 / (3.0 * std::sqrt(3.0)), 0.0})
              < 1e-4);
    }
    CHECK_THROWS_AS(exterior_map_halfdisk(Complex{}), pole_error);
}

TEST_CASE("exterior map images avoid the closed half-disk") {
    for (double r : {0.9, 0.99}) {
        for (int j = 0; j < 64; ++j) {
            const Complex w = exterior_map_halfdisk(std::polar(r, 2.0 * pi * j / 64 + 0.01));
            CHECK((std::abs(w) > 1.0 || w.imag() < 0.0));
        }
    }
}

TEST_CASE("exterior map continuity on circles (fixed branch)") {
    for (double r : {0.3, 0.6, 0.9}) {
        const int n = 512;
        Complex prev = exterior_map_halfdisk(std::polar(r, 0.0) + Complex{1e-9, 1e-9});
        double max_jump = 0.0;
        for (int j = 1; j <= n; ++j) {
            const Complex cur = exterior_map_halfdisk(std::polar(r, 2.0 * pi * j / n + 1e-9));
            max_jump = std::max(max_jump, std::abs(cur - prev));
            prev = cur;
        }
        CHECK(max_jump < 10.0 * 2.0 * pi / n * (1.0 / (r * r) + 2.0));
    }
}

TEST_CASE("outer summary values and radius independence") {
    const auto os = outer_summary_halfdisk();
    CHECK(std::abs(os.outer_radius - 0.7698003589195010) < 1e-9);
    CHECK(std::abs(os.outer_center - Complex{0.0, 0.3849001794597505}) < 1e-9);
    CHECK(std::abs(os.outer_center.real()) < 1e-10);
    for (double r : {0.3, 0.7}) {
        const auto o2 = outer_summary_halfdisk(r);
        CHECK(std::abs(o2.outer_radius - os.outer_radius) < 1e-9);
        CHECK(std::abs(o2.outer_center - os.outer_center) < 1e-9);
    }
}

TEST_CASE("inner and outer centers differ") {
    const auto ic = inner_center();
    const auto os = outer_summary_halfdisk();
    CHECK(std::abs(ic.y0 - os.outer_center.imag()) > 0.1);
}
