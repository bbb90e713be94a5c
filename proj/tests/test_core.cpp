#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlslab/core.hpp"

#include <cmath>
#include <random>

using namespace nlslab;

TEST_CASE("lambda and zeta at pinned points") {
    CHECK(std::abs(lambda(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(lambda(cplx{0, 1})) < 1e-15);
    CHECK(std::abs(lambda(2.0) - 1.25) < 1e-15);
    CHECK(std::abs(zeta(1.0)) < 1e-15);
    CHECK(std::abs(zeta(cplx{0, 1}) - cplx{0, 1}) < 1e-15);
    CHECK(std::abs(zeta(2.0) - 0.75) < 1e-15);
    CHECK_THROWS_AS(lambda(cplx{}), std::domain_error);
    CHECK_THROWS_AS(zeta(cplx{}), std::domain_error);
    CHECK_THROWS_AS(phase_phi(cplx{}, 1.0, 1.0), std::domain_error);
}

TEST_CASE("lambda^2 - zeta^2 = 1 and inversion symmetry") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(0.1, 5.0), ang(-M_PI, M_PI);
    for (int k = 0; k < 200; ++k) {
        cplx z = std::polar(mag(rng), ang(rng));
        cplx l = lambda(z), s = zeta(z);
        CHECK(std::abs(l * l - s * s - 1.0) < 1e-12);
        CHECK(std::abs(lambda(1.0 / z) - l) < 1e-12);
        CHECK(std::abs(zeta(1.0 / z) + s) < 1e-12);
    }
}

TEST_CASE("Phi is purely imaginary for real z") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> zs(-20.0, 20.0), xs(-30.0, 30.0), ts(0.0, 50.0);
    for (int k = 0; k < 300; ++k) {
        double z = zs(rng);
        if (std::abs(z) < 0.05) continue;
        cplx p = phase_phi(z, xs(rng), ts(rng));
        CHECK(std::abs(p.real()) < 1e-12 * (1.0 + std::abs(p)));
    }
}

TEST_CASE("Phi on the circle matches -4 t sin(theta) (xi - cos(theta))") {
    CHECK(std::abs(phase_phi(1.0, 3.0, 2.0)) < 1e-14);
    CHECK(std::abs(phase_phi(cplx{0, 1}, 0.0, 1.0)) < 1e-14);
    // z = e^{i pi/3}, x = 0, t = 1: both routes give +sqrt(3)
    {
        cplx z = std::polar(1.0, M_PI / 3);
        cplx p = phase_phi(z, 0.0, 1.0);
        CHECK(std::abs(p - cplx{std::sqrt(3.0), 0.0}) < 1e-12);
        CHECK(std::abs(phase_phi_circle(M_PI / 3, 0.0, 1.0) - std::sqrt(3.0)) < 1e-12);
    }
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> th(0.01, M_PI - 0.01), xs(-20.0, 20.0), ts(0.1, 40.0);
    for (int k = 0; k < 300; ++k) {
        double theta = th(rng), x = xs(rng), t = ts(rng);
        cplx p = phase_phi(std::polar(1.0, theta), x, t);
        double circle = -4.0 * t * std::sin(theta) * (x / (2.0 * t) - std::cos(theta));
        CHECK(std::abs(p - cplx{circle, 0.0}) < 1e-11 * (1.0 + std::abs(circle)));
    }
}

TEST_CASE("spatial grid invariants") {
    SpatialGrid g(-40.0, 40.0, 2048);
    CHECK(g.h() == doctest::Approx(80.0 / 2048).epsilon(1e-15));
    CHECK(g.x(g.n / 2) == doctest::Approx(0.0));
    CHECK_THROWS_AS(SpatialGrid(1.0, -1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(SpatialGrid(-1.0, 1.0, 100), std::invalid_argument);
}

TEST_CASE("spectral grid pairing and exclusions") {
    auto grid = SpectralGrid::make(0.05, 0.02, 128);
    CHECK(grid.size() > 100);
    for (int i = 0; i < grid.size(); ++i) {
        double z = grid.z[i];
        CHECK(std::abs(z) > grid.delta0 * (1.0 - 1e-12));
        CHECK(std::abs(std::abs(z) - 1.0) > grid.delta1 * (1.0 - 1e-9));
        int p = grid.partner(i);
        CHECK(std::abs(grid.z[p] - 1.0 / z) < 1e-12 * std::abs(1.0 / z));
        CHECK(grid.partner(p) == i);
    }
    // sorted
    for (int i = 0; i + 1 < grid.size(); ++i) CHECK(grid.z[i] < grid.z[i + 1]);
}

TEST_CASE("interp_value reproduces smooth functions") {
    SpatialGrid g(-10.0, 10.0, 512);
    GridFunction f(g);
    for (int j = 0; j < g.n; ++j) f.values[j] = std::tanh(g.x(j)) + I * std::sin(0.3 * g.x(j));
    for (double x : {-3.21, -0.017, 0.5003, 4.4444}) {
        cplx exact = std::tanh(x) + I * std::sin(0.3 * x);
        CHECK(std::abs(interp_value(f, x) - exact) < 1e-8);
    }
}
