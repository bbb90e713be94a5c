#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlslab/nsoliton.hpp"

#include <cmath>
#include <random>

using namespace nlslab;

TEST_CASE("N = 0 gives the constant background") {
    SolitonSpec spec;
    CHECK(nsoliton_eval(spec, 3.0, 2.0) == cplx{1.0, 0.0});
}

TEST_CASE("one_soliton pinned values and boundary limits") {
    // black soliton
    for (double x : {-3.0, 0.0, 1.7})
        CHECK(std::abs(one_soliton(x, 5.0, cplx{0, 1}, 0.0) - std::tanh(x)) < 1e-14);
    cplx z0 = std::polar(1.0, M_PI / 3);
    CHECK(std::abs(one_soliton(1e3, 0.0, z0, 0.0) - 1.0) < 1e-12);
    CHECK(std::abs(one_soliton(-1e3, 0.0, z0, 0.0) - z0 * z0) < 1e-12);
    // |q|^2 dip reaches (Re z0)^2 at x = x0 + 2 Re(z0) t
    double t = 3.0, x0 = 0.7;
    double xc = x0 + 2.0 * z0.real() * t;
    double minval = 1e9;
    double argmin = 0;
    for (double x = xc - 2; x <= xc + 2; x += 1e-3) {
        double v = std::norm(one_soliton(x, t, z0, x0));
        if (v < minval) { minval = v; argmin = x; }
    }
    CHECK(std::abs(minval - z0.real() * z0.real()) < 1e-8);
    CHECK(std::abs(argmin - xc) < 2e-3);
}

TEST_CASE("black soliton from the linear system: z0 = i, c0 = -2") {
    auto spec = SolitonSpec::centered({M_PI / 2});
    CHECK(std::abs(spec.discrete.c[0] - cplx{-2.0, 0.0}) < 1e-15);
    for (double t : {0.0, 4.0})
        for (double x : {-6.0, -0.3, 0.0, 2.0, 9.0})
            CHECK(std::abs(nsoliton_eval(spec, x, t) - std::tanh(x)) < 1e-13);
}

TEST_CASE("N = 1 generic pole reproduces the traveling one-soliton") {
    double theta = M_PI / 3;
    auto spec = SolitonSpec::centered({theta});
    cplx z0 = std::polar(1.0, theta);
    for (double t : {-2.0, 0.0, 7.5})
        for (double x = -12.0; x <= 12.0; x += 0.75)
            CHECK(std::abs(nsoliton_eval(spec, x, t) - one_soliton(x, t, z0, 0.0)) < 1e-12);
}

TEST_CASE("solve routes agree and Cramer oracle matches") {
    auto spec = SolitonSpec::make({M_PI / 3, 2 * M_PI / 3}, {1.3, 0.4});
    for (double t : {0.0, 1.5})
        for (double x : {-4.0, -1.0, 0.0, 0.8, 5.0}) {
            cplx qh = nsoliton_eval_hermitian(spec, x, t);
            cplx qr = nsoliton_eval_rowscaled(spec, x, t);
            cplx qc = nsoliton_eval_cramer(spec, x, t);
            CHECK(std::abs(qh - qr) < 1e-10);
            CHECK(std::abs(qh - qc) < 1e-9);
        }
}

TEST_CASE("boundary values: q -> 1 on the right, prod z_k^2 on the left") {
    auto spec = SolitonSpec::centered({0.7 * M_PI, 0.8 * M_PI});
    cplx left = spec.discrete.product_z_sq();
    // 2(theta0 + theta1) = 3 pi: this pair keeps the q -> -1 left boundary
    CHECK(std::abs(left + 1.0) < 1e-14);
    CHECK(std::abs(nsoliton_eval(spec, 60.0, 1.0) - 1.0) < 1e-12);
    CHECK(std::abs(nsoliton_eval(spec, -60.0, 1.0) - left) < 1e-12);
    // far into the saturated regime the row-scaled path must stay finite
    CHECK(std::abs(nsoliton_eval(spec, -500.0, 120.0) - left) < 1e-10);
    CHECK(std::abs(nsoliton_eval(spec, 500.0, 120.0) - 1.0) < 1e-10);
}

TEST_CASE("|q| <= 1 and Y positive definite over random draws") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> th(0.15, M_PI - 0.15), mag(0.3, 3.0);
    // phases kept within the range where the smallest eigenvalue is resolvable
    // above the e^{max Phi} * eps_machine eigensolver noise
    std::uniform_real_distribution<double> xs(-3.0, 3.0), ts(0.0, 2.0);
    std::uniform_real_distribution<double> xw(-30.0, 30.0), tw(0.0, 20.0);
    std::uniform_int_distribution<int> ns(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int N = ns(rng);
        std::vector<double> thetas, mags;
        while ((int)thetas.size() < N) {
            double cand = th(rng);
            bool ok = true;
            for (double u : thetas)
                if (std::abs(u - cand) < 0.1) ok = false;
            if (ok) {
                thetas.push_back(cand);
                mags.push_back(mag(rng));
            }
        }
        auto spec = SolitonSpec::make(thetas, mags);
        CHECK(min_eigenvalue_Y(spec, xs(rng), ts(rng)) > 0.0);
        CHECK(std::abs(nsoliton_eval(spec, xw(rng), tw(rng))) <= 1.0 + 1e-10);
    }
}

TEST_CASE("invalid couplings are rejected") {
    SolitonSpec spec;
    spec.discrete.thetas = {M_PI / 2};
    spec.discrete.c = {cplx{2.0, 0.0}}; // off the ray i z R_+
    CHECK_THROWS_AS(nsoliton_eval(spec, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("PDE residual of the exact solution is at the FD floor") {
    auto spec2 = SolitonSpec::centered({M_PI / 3, 2 * M_PI / 3});
    auto spec3 = SolitonSpec::make({M_PI / 4, M_PI / 2, 3 * M_PI / 4}, {1.0, 2.0, 0.7});
    for (double t : {0.5, 3.0})
        for (double x : {-5.0, -1.2, 0.0, 2.4, 6.0}) {
            CHECK(nsoliton_pde_residual(spec2, x, t) < 1e-5);
            CHECK(nsoliton_pde_residual(spec3, x, t) < 1e-5);
        }
}

TEST_CASE("separation formula approaches the exact 2-soliton") {
    // slow pair: speeds +-2 sin(0.12), so the interaction remainder is still
    // resolvable above the solver noise floor at t = 30
    auto spec = SolitonSpec::centered({M_PI / 2 - 0.12, M_PI / 2 + 0.12});
    auto shifts = separation_shifts(spec);
    auto gap = [&](double t) {
        double worst = 0.0;
        for (double xi = -0.4; xi <= 0.4; xi += 0.02) {
            double x = 2.0 * xi * t;
            worst = std::max(worst,
                             std::abs(nsoliton_eval(spec, x, t) - nsoliton_separation(spec, shifts, 0.0, x, t)));
        }
        return worst;
    };
    double g15 = gap(15.0), g30 = gap(30.0);
    CHECK(g30 < 0.6 * g15);
}

TEST_CASE("collision phase shift read off dip trajectories") {
    // solitons at theta and pi - theta collide near the origin; the dip of the
    // right-mover is offset before/after by the Blaschke interaction term
    double theta = M_PI / 3;
    auto spec = SolitonSpec::centered({theta, M_PI - theta});
    cplx z0 = std::polar(1.0, theta), z1 = std::polar(1.0, M_PI - theta);
    double speed = 2.0 * z0.real();

    auto dip_near = [&](double t, double guess) {
        double best = guess, bestv = 1e9;
        for (double x = guess - 4.0; x <= guess + 4.0; x += 1e-4) {
            double v = std::norm(nsoliton_eval(spec, x, t));
            if (v < bestv) { bestv = v; best = x; }
        }
        return best;
    };
    double T = 40.0;
    double before = dip_near(-T, -speed * T) + speed * T;
    double after = dip_near(T, speed * T) - speed * T;
    double measured = after - before;
    double predicted = -std::log(std::abs((z0 - z1) / (z0 * z1 - 1.0))) / z0.imag();
    CHECK(std::abs(measured - predicted) < 2e-3);
}
