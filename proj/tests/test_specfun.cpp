#include <cmath>
#include <random>

#include <catch_amalgamated.hpp>

#include "capmap/appell.hpp"
#include "capmap/gamma.hpp"

using namespace capmap;

TEST_CASE("gamma_real known values") {
    CHECK(gamma_real(0.5) == Catch::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(gamma_real(5.0) == Catch::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_real(1.0) == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_real(0.25) == Catch::Approx(3.6256099082219083).epsilon(1e-13));
}

TEST_CASE("gamma_real recurrence") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.1, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double x = unif(rng);
        CHECK(gamma_real(x + 1.0) == Catch::Approx(x * gamma_real(x)).epsilon(1e-12));
    }
}

TEST_CASE("gamma_real errors") {
    CHECK_THROWS_AS(gamma_real(0.0), pole_error);
    CHECK_THROWS_AS(gamma_real(-3.0), pole_error);
    CHECK_THROWS_AS(gamma_real(200.0), domain_error);
    // negative non-integers via reflection
    CHECK(gamma_real(-0.5) == Catch::Approx(-2.0 * std::sqrt(pi)).epsilon(1e-12));
}

TEST_CASE("F1 trivial normalization") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(0.1, 3.0);
    for (int i = 0; i < 100; ++i) {
        AppellArgs args{unif(rng), unif(rng), unif(rng), 3.0 + unif(rng), Complex{}, Complex{}};
        CHECK(std::abs(appell_f1_series(args).value - 1.0) < 1e-12);
        CHECK(std::abs(appell_f1_integral(args).value - 1.0) < 1e-11);
    }
}

TEST_CASE("F1 reduction to 2F1 and log closed form") {
    AppellArgs args{1.0, 1.0, 1.0, 2.0, Complex{0.5, 0.0}, Complex{}};
    const double exact = 2.0 * std::log(2.0);  // -ln(1-x)/x at x = 1/2
    CHECK(std::abs(appell_f1_series(args).value - exact) < 1e-10);
    CHECK(std::abs(appell_f1_integral(args).value - exact) < 1e-10);
    CHECK(std::abs(appell_f1(args).value - exact) < 1e-10);
}

TEST_CASE("F1 symmetry under (b,x) <-> (b',y)") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> mag(0.0, 0.6);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> par(0.2, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double a = par(rng), b = par(rng), bp = par(rng);
        const double c = a + par(rng);
        const Complex x = std::polar(mag(rng), ang(rng));
        const Complex y = std::polar(mag(rng), ang(rng));
        const Complex lhs = appell_f1(AppellArgs{a, b, bp, c, x, y}).value;
        const Complex rhs = appell_f1(AppellArgs{a, bp, b, c, y, x}).value;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("F1 series/integral agreement") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> mag(0.0, 0.8);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> par(0.2, 1.5);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const double a = par(rng), b = par(rng), bp = par(rng);
        const double c = a + par(rng);
        Complex x = std::polar(mag(rng), ang(rng));
        Complex y = std::polar(mag(rng), ang(rng));
        // keep the integral's cut condition comfortably satisfied
        if (x.real() >= 0.99 || y.real() >= 0.99) continue;
        AppellArgs args{a, b, bp, c, x, y};
        const Complex s = appell_f1_series(args).value;
        const Complex q = appell_f1_integral(args).value;
        CHECK(std::abs(s - q) < 1e-10 * (1.0 + std::abs(s)));
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("F1 preconditions and errors") {
    CHECK_THROWS_AS(
        appell_f1_series(AppellArgs{1, 1, 1, 2, Complex{1.2, 0.0}, Complex{}}),
        domain_error);
    CHECK_THROWS_AS(
        appell_f1_integral(AppellArgs{-1.0, 1, 1, 2, Complex{0.2, 0.0}, Complex{}}),
        domain_error);
    // argument on the cut [1, inf)
    CHECK_THROWS_AS(
        appell_f1_integral(AppellArgs{1, 1, 1, 2, Complex{2.0, 0.0}, Complex{}}),
        branch_error);
    // c a non-positive integer
    CHECK_THROWS_AS(appell_f1_series(AppellArgs{1, 1, 1, -2.0, Complex{}, Complex{}}),
                    domain_error);
}

TEST_CASE("F1 dispatcher method selection") {
    AppellArgs inside{1.0, 0.5, 0.5, 2.0, Complex{0.3, 0.1}, Complex{0.2, -0.1}};
    CHECK(appell_f1(inside).method == F1Method::series);
    AppellArgs outside{1.0, 0.5, 0.5, 2.0, Complex{0.9, 0.3}, Complex{0.2, -0.1}};
    CHECK(appell_f1(outside).method == F1Method::integral);
}
