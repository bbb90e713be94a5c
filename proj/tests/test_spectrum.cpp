#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlslab/nsoliton.hpp"
#include "nlslab/potentials.hpp"
#include "nlslab/spectrum.hpp"

#include <cmath>

using namespace nlslab;

namespace {
const SpatialGrid kGrid(-40.0, 40.0, 2048);
}

TEST_CASE("black soliton: single zero at pi/2 with gamma = i and c = -2") {
    auto q = black_soliton(kGrid);
    auto zeros = find_circle_zeros(q, 256);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0].theta - M_PI / 2) < 1e-9);
    CHECK(!zeros[0].boundary_suspect);

    auto nc = norming_constant(q, zeros[0].theta);
    CHECK(std::abs(nc.gamma - I) < 1e-6);
    CHECK(std::abs(nc.a_prime - cplx{0.0, -0.5}) < 1e-6);
    CHECK(std::abs(nc.c - cplx{-2.0, 0.0}) < 1e-5);
    CHECK(nc.mismatch < 1e-4);
    // Lemma sign relation: sgn(-i gamma) = -sgn(-i da/dlambda); da/dlambda = a' z/zeta
    cplx zk{0, 1};
    cplx dadl = nc.a_prime * zk / zeta(zk);
    double lhs = (-I * nc.gamma).real() > 0 ? 1.0 : -1.0;
    double rhs = (-I * dadl).real() > 0 ? 1.0 : -1.0;
    CHECK(lhs == -rhs);
}

TEST_CASE("2-soliton round trip recovers poles and couplings") {
    auto spec = SolitonSpec::make({M_PI / 3, 2 * M_PI / 3}, {1.7, 0.9});
    auto q = nsoliton_grid(spec, kGrid, 0.0);

    // a_extend matches the Blaschke closed form at a probe
    cplx z{0, 2};
    cplx expected{1.0, 0.0};
    for (int k = 0; k < 2; ++k) {
        cplx zk = spec.discrete.pole(k);
        expected *= (z - zk) / (z - std::conj(zk));
    }
    CHECK(std::abs(a_extend(q, z) - expected) < 1e-6);

    auto zeros = find_circle_zeros(q, 512);
    REQUIRE(zeros.size() == 2);
    for (int k = 0; k < 2; ++k) {
        CHECK(std::abs(zeros[k].theta - spec.discrete.thetas[k]) < 1e-6);
        auto nc = norming_constant(q, zeros[k].theta);
        CHECK(std::abs(nc.c - spec.discrete.c[k]) / std::abs(spec.discrete.c[k]) < 1e-3);
        CHECK(nc.mismatch < 1e-4);
    }
}

TEST_CASE("3-soliton round trip") {
    auto spec = SolitonSpec::make({M_PI / 4, M_PI / 2, 3 * M_PI / 4}, {0.6, 2.2, 1.1});
    auto q = nsoliton_grid(spec, kGrid, 0.0);
    auto zeros = find_circle_zeros(q, 512);
    REQUIRE(zeros.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(zeros[k].theta - spec.discrete.thetas[k]) < 1e-6);
        auto nc = norming_constant(q, zeros[k].theta);
        CHECK(std::abs(nc.c - spec.discrete.c[k]) / std::abs(spec.discrete.c[k]) < 1e-3);
    }
}

TEST_CASE("perturbed black soliton grows an extra zero near +1 (Rouche regime)") {
    // f = +i * bump has C(+,f) = + int sech^2 bump / 2 > 0: a zero appears on
    // the circle near z = 1 at theta ~ eps C(+,f), while C(-,f) < 0 keeps the
    // continued Wronskian zero near -1 below the axis (no soliton there)
    double eps = 0.08;
    auto q = tanh_compact_bump(kGrid, 0.0, eps);
    double C = 0.0;
    {
        const double h = 1e-3;
        for (double y = -1.0; y <= 1.0; y += h) {
            double sech = 1.0 / std::cosh(y);
            C += 0.5 * sech * sech * bump_value(y, 0.0, 1.0).real() * h;
        }
    }
    CHECK(C > 0.1);
    auto zeros = find_circle_zeros(q, 4096);
    REQUIRE(zeros.size() == 2);
    CHECK(std::abs(zeros[0].theta - eps * C) < 0.3 * eps * C);
    CHECK(std::abs(zeros[1].theta - M_PI / 2) < 0.06);
}

TEST_CASE("trace formula: reflectionless integral term vanishes exactly") {
    // exact reflectionless data: the factorization must reduce to the
    // Blaschke product
    DiscreteSpectrum disc;
    disc.thetas = {0.7 * M_PI, 0.8 * M_PI};
    for (double th : disc.thetas) disc.c.push_back(I * std::polar(1.0, th) * 2.0 * std::sin(th));
    auto grid = SpectralGrid::make(0.05, 0.02, 64);
    ScatteringData data;
    data.coeffs.grid = grid;
    data.coeffs.r.assign(grid.size(), cplx{});
    data.discrete = disc;
    data.density = make_density(data.coeffs);

    cplx z{0, 2};
    cplx blaschke{1, 0};
    for (int k = 0; k < 2; ++k) blaschke *= (z - disc.pole(k)) / (z - std::conj(disc.pole(k)));
    cplx integral = data.density.cauchy_full(z);
    cplx a_fact = blaschke * std::exp(-integral / (2.0 * M_PI * I));
    CHECK(std::abs(a_fact - blaschke) < 1e-14);
    CHECK(theta_condition_residual(data) < 1e-14);
}

TEST_CASE("trace formula through the numerical pipeline, reflectionless input") {
    auto spec = SolitonSpec::centered({0.7 * M_PI, 0.8 * M_PI});
    auto q = nsoliton_grid(spec, kGrid, 0.0);
    auto grid = SpectralGrid::make(0.05, 0.02, 64);
    ForwardOptions opts;
    opts.n_scan = 256;
    auto data = forward_scattering(q, grid, opts);
    REQUIRE(data.discrete.size() == 2);
    CHECK(trace_formula_check(q, data) < 1e-6);
    CHECK(theta_condition_residual(data) < 1e-6);
}

TEST_CASE("trace formula and theta-condition for tanh + 0.05 gaussian") {
    auto q = tanh_gaussian(kGrid, 0.05);
    auto grid = SpectralGrid::make(0.05, 0.02, 128);
    ForwardOptions opts;
    opts.n_scan = 256;
    auto data = forward_scattering(q, grid, opts);
    REQUIRE(data.discrete.size() == 1);
    CHECK(trace_formula_check(q, data) < 5e-3);
    CHECK(theta_condition_residual(data) < 5e-3);
}
