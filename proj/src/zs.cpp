#include "nlslab/zs.hpp"

#include <cmath>

namespace nlslab {

namespace {

// Right-hand sides of the normalized column systems at one x.
inline void rhs(cplx z, cplx invz, cplx q, const Vec2& m1, const Vec2& m2, Vec2& d1, Vec2& d2) {
    cplx qc = std::conj(q);
    d1[0] = I * (-invz * m1[0] + qc * m1[1]);
    d1[1] = I * (-q * m1[0] + z * m1[1]);
    d2[0] = I * (-z * m2[0] + qc * m2[1]);
    d2[1] = I * (-q * m2[0] + invz * m2[1]);
}

inline void axpy(Vec2& y, double a, const Vec2& x) {
    y[0] += a * x[0];
    y[1] += a * x[1];
}

} // namespace

JostSweep jost_sweep(const GridFunction& q, cplx z, Side side, const JostOptions& opts) {
    q.validate();
    if (z == cplx{}) throw std::domain_error("jost_sweep: z == 0");
    const auto& g = q.grid;
    const int n = g.n;
    const int match = n / 2;
    const double h = g.h();
    const cplx invz = 1.0 / z;
    const cplx zt = zeta(z);

    const double speed = std::abs(z) + std::abs(invz) + 2.0;
    const int nsub = std::max(2, (int)std::ceil(h * speed / opts.theta_step));

    JostSweep out;
    Vec2 m1, m2;
    int j, dir, steps;
    // Free solutions at a background value w on the unit circle have columns
    // (1, w/z) e^{-i zeta x} and (wbar/z, 1) e^{+i zeta x}; w = -1 recovers
    // B_- and w = +1 recovers B_+.  Reading w off the grid end makes the
    // transform usable for N-solitons whose left boundary is prod z_k^2 != -1.
    if (side == Side::minus) {
        cplx w = q.values.front() / std::abs(q.values.front());
        m1 = {1.0, w * invz};
        m2 = {std::conj(w) * invz, 1.0};
        j = 0;
        dir = +1;
        steps = match;
    } else {
        cplx w = q.values.back() / std::abs(q.values.back());
        m1 = {1.0, w * invz};
        m2 = {std::conj(w) * invz, 1.0};
        j = n - 1;
        dir = -1;
        steps = (n - 1) - match;
    }

    if (opts.want_profile) {
        out.m1_profile.reserve(steps + 1);
        out.m2_profile.reserve(steps + 1);
        out.x_profile.reserve(steps + 1);
    }

    // |psi|^2 weights: psi_1 = m_1 e^{-i zeta x}, psi_2 = m_2 e^{i zeta x}.
    auto psi_norms = [&](double x, const Vec2& a1, const Vec2& a2, double& w1, double& w2) {
        double e1 = std::exp(2.0 * std::imag(zt) * x);  // |e^{-i zeta x}|^2
        double e2 = std::exp(-2.0 * std::imag(zt) * x); // |e^{+i zeta x}|^2
        w1 = (std::norm(a1[0]) + std::norm(a1[1])) * e1;
        w2 = (std::norm(a2[0]) + std::norm(a2[1])) * e2;
    };

    double w1_prev = 0, w2_prev = 0;
    if (opts.want_norm) psi_norms(g.x(j), m1, m2, w1_prev, w2_prev);
    if (opts.want_profile) {
        out.m1_profile.push_back(m1);
        out.m2_profile.push_back(m2);
        out.x_profile.push_back(g.x(j));
    }

    const double hs = dir * h / nsub;
    Vec2 k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b, ta, tb;
    for (int s = 0; s < steps; ++s) {
        double x0 = g.x(j);
        for (int u = 0; u < nsub; ++u) {
            double xa = x0 + u * hs;
            cplx qa = interp_value(q, xa);
            cplx qm = interp_value(q, xa + 0.5 * hs);
            cplx qb = interp_value(q, xa + hs);

            rhs(z, invz, qa, m1, m2, k1a, k1b);
            ta = m1; axpy(ta, 0.5 * hs, k1a);
            tb = m2; axpy(tb, 0.5 * hs, k1b);
            rhs(z, invz, qm, ta, tb, k2a, k2b);
            ta = m1; axpy(ta, 0.5 * hs, k2a);
            tb = m2; axpy(tb, 0.5 * hs, k2b);
            rhs(z, invz, qm, ta, tb, k3a, k3b);
            ta = m1; axpy(ta, hs, k3a);
            tb = m2; axpy(tb, hs, k3b);
            rhs(z, invz, qb, ta, tb, k4a, k4b);

            const double c = hs / 6.0;
            for (int i = 0; i < 2; ++i) {
                m1[i] += c * (k1a[i] + 2.0 * k2a[i] + 2.0 * k3a[i] + k4a[i]);
                m2[i] += c * (k1b[i] + 2.0 * k2b[i] + 2.0 * k3b[i] + k4b[i]);
            }
            if (opts.want_norm) {
                double w1, w2;
                psi_norms(xa + hs, m1, m2, w1, w2);
                out.norm1 += 0.5 * std::abs(hs) * (w1 + w1_prev);
                out.norm2 += 0.5 * std::abs(hs) * (w2 + w2_prev);
                w1_prev = w1;
                w2_prev = w2;
            }
        }
        j += dir;
        if (opts.want_profile) {
            out.m1_profile.push_back(m1);
            out.m2_profile.push_back(m2);
            out.x_profile.push_back(g.x(j));
        }
    }

    if (!(std::isfinite(std::abs(m1[0])) && std::isfinite(std::abs(m2[0]))))
        throw std::runtime_error("jost_sweep: non-finite integration result");
    out.m1 = m1;
    out.m2 = m2;
    return out;
}

JostPair jost_solve(const GridFunction& q, cplx z, Side side) {
    auto sw = jost_sweep(q, z, side);
    return JostPair{z, q.grid.x(q.grid.n / 2), sw.m1, sw.m2};
}

JostColumns jost_all(const GridFunction& q, cplx z) {
    auto mi = jost_sweep(q, z, Side::minus);
    auto pl = jost_sweep(q, z, Side::plus);
    return JostColumns{z, q.grid.x(q.grid.n / 2), mi.m1, pl.m2, pl.m1, mi.m2};
}

cplx wronskian(const GridFunction& q, cplx z) {
    auto mi = jost_sweep(q, z, Side::minus);
    auto pl = jost_sweep(q, z, Side::plus);
    return det2(mi.m1, pl.m2);
}

cplx a_extend(const GridFunction& q, cplx z) {
    if (std::abs(z) == 0.0) throw std::domain_error("a_extend: z == 0");
    return wronskian(q, z) / (1.0 - 1.0 / (z * z));
}

namespace {

void coefficients_at(const GridFunction& q, cplx z, double x_match, cplx& a, cplx& b) {
    auto mi = jost_sweep(q, z, Side::minus);
    auto pl = jost_sweep(q, z, Side::plus);
    cplx denom = 1.0 - 1.0 / (z * z);
    a = det2(mi.m1, pl.m2) / denom;
    // b mixes two first columns, so the oscillation factors do not cancel.
    b = det2(pl.m1, mi.m1) * std::exp(-2.0 * I * zeta(z) * x_match) / denom;
}

} // namespace

ScatteringCoefficients scattering_coefficients(const GridFunction& q, const SpectralGrid& grid, Exec exec) {
    const int m = grid.size();
    ScatteringCoefficients out;
    out.grid = grid;
    out.a.resize(m);
    out.b.resize(m);
    out.r.resize(m);
    const double x_match = q.grid.x(q.grid.n / 2);

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < m; ++i) {
            cplx a, b;
            coefficients_at(q, grid.z[i], x_match, a, b);
            out.a[i] = a;
            out.b[i] = b;
            out.r[i] = b / a;
        }
    } else {
        for (int i = 0; i < m; ++i) {
            cplx a, b;
            coefficients_at(q, grid.z[i], x_match, a, b);
            out.a[i] = a;
            out.b[i] = b;
            out.r[i] = b / a;
        }
    }
    return out;
}

} // namespace nlslab
