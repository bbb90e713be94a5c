#include "nlslab/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

cplx DiscreteSpectrum::product_z_sq() const {
    cplx p{1.0, 0.0};
    for (int k = 0; k < size(); ++k) p *= pole(k) * pole(k);
    return p;
}

void DiscreteSpectrum::validate() const {
    if (thetas.size() != c.size()) throw std::invalid_argument("DiscreteSpectrum: size mismatch");
    for (int k = 0; k < size(); ++k) {
        if (!(thetas[k] > 0.0 && thetas[k] < M_PI))
            throw std::invalid_argument("DiscreteSpectrum: theta outside (0, pi)");
        if (k > 0 && !(thetas[k] > thetas[k - 1]))
            throw std::invalid_argument("DiscreteSpectrum: thetas not strictly increasing");
        // c_k = i z_k |c_k|
        cplx ray = c[k] / (I * pole(k));
        if (!(ray.real() > 0.0) || std::abs(ray.imag()) > 1e-8 * std::abs(ray))
            throw std::invalid_argument("DiscreteSpectrum: coupling off the ray i z_k R_+");
    }
}

std::vector<CircleZero> find_circle_zeros(const GridFunction& q, int n_scan, double delta1) {
    if (n_scan < 64) throw std::invalid_argument("find_circle_zeros: n_scan < 64");
    std::vector<double> thetas(n_scan), absw(n_scan);
    std::vector<cplx> w(n_scan);
    for (int i = 0; i < n_scan; ++i) thetas[i] = M_PI * (i + 0.5) / n_scan;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_scan; ++i) {
        w[i] = wronskian(q, std::polar(1.0, thetas[i]));
        absw[i] = std::abs(w[i]);
    }

    auto wron = [&](double th) { return wronskian(q, std::polar(1.0, th)); };

    std::vector<CircleZero> zeros;
    const double spacing = M_PI / n_scan;
    for (int i = 0; i < n_scan; ++i) {
        bool is_min = (i == 0 || absw[i] <= absw[i - 1]) && (i == n_scan - 1 || absw[i] <= absw[i + 1]);
        if (!is_min) continue;

        // complex secant on W(e^{i theta}); theta stays real along the circle
        double th0 = thetas[i];
        double th1 = th0 + 0.5 * spacing;
        cplx w0 = w[i], w1 = wron(th1);
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            cplx dw = w1 - w0;
            if (std::abs(dw) == 0.0) break;
            cplx step = w1 * (th1 - th0) / dw;
            double th2 = th1 - step.real();
            th0 = th1;
            w0 = w1;
            th1 = th2;
            if (!(th1 > 1e-12 && th1 < M_PI - 1e-12)) break;
            w1 = wron(th1);
            if (std::abs(w1) < 1e-11) {
                ok = true;
                break;
            }
            if (std::abs(th1 - th0) < 1e-13) {
                ok = std::abs(w1) < 1e-9;
                break;
            }
        }
        if (!ok) continue;
        // |a| at the refined zero must clear the spec threshold
        cplx z = std::polar(1.0, th1);
        double denom = std::abs(1.0 - 1.0 / (z * z));
        if (denom > 1e-12 && std::abs(w1) / denom > 1e-9) continue;
        bool suspect = 2.0 * std::sin(0.5 * th1) < delta1 || 2.0 * std::cos(0.5 * th1) < delta1;
        zeros.push_back({th1, suspect});
    }

    std::sort(zeros.begin(), zeros.end(), [](auto& a, auto& b) { return a.theta < b.theta; });
    std::vector<CircleZero> dedup;
    for (auto& zk : zeros) {
        if (!dedup.empty() && std::abs(zk.theta - dedup.back().theta) < 0.5 * spacing) continue;
        dedup.push_back(zk);
    }
    return dedup;
}

NormingConstant norming_constant(const GridFunction& q, double theta) {
    cplx zk = std::polar(1.0, theta);
    JostOptions opts;
    opts.want_norm = true;
    auto mi = jost_sweep(q, zk, Side::minus, opts);
    auto pl = jost_sweep(q, zk, Side::plus, opts);

    const double x_match = q.grid.x(q.grid.n / 2);
    // gamma from psi_1^- = gamma psi_2^+, least squares over both components
    cplx num = mi.m1[0] * std::conj(pl.m2[0]) + mi.m1[1] * std::conj(pl.m2[1]);
    double den = std::norm(pl.m2[0]) + std::norm(pl.m2[1]);
    cplx gamma = num / den * std::exp(-2.0 * I * zeta(zk) * x_match);

    // a'(z_k) by central difference along the circle
    const double hth = 1e-5;
    cplx ap = a_extend(q, std::polar(1.0, theta + hth));
    cplx am = a_extend(q, std::polar(1.0, theta - hth));
    cplx a_prime = (ap - am) / (zk * cplx{0.0, 2.0 * std::sin(hth)});

    cplx c_ratio = gamma / a_prime;

    // int over R: left half via |psi_1^-|^2 / |gamma|^2, right half directly
    double total = mi.norm1 / std::norm(gamma) + pl.norm2;
    cplx c_integral = 2.0 * I * zk / total;

    NormingConstant out;
    out.gamma = gamma;
    out.a_prime = a_prime;
    out.c_ratio = c_ratio;
    out.c_integral = c_integral;
    double mism = std::abs(c_ratio - c_integral) / std::abs(c_ratio);
    // the projected value must also sit on the ray i z_k R_+
    cplx ray = c_ratio / (I * zk);
    double off_ray = std::abs(ray.imag()) / std::abs(ray);
    out.mismatch = std::max(mism, off_ray);
    out.c = I * zk * std::abs(c_ratio);
    if (out.mismatch > 5e-3)
        throw std::runtime_error("norming_constant: route disagreement " + std::to_string(out.mismatch));
    return out;
}

ScatteringData forward_scattering(const GridFunction& q, const SpectralGrid& grid,
                                  const ForwardOptions& opts) {
    ScatteringData data;
    data.coeffs = scattering_coefficients(q, grid, opts.exec);
    auto zeros = find_circle_zeros(q, opts.n_scan, grid.delta1);
    for (auto& zk : zeros) {
        if (zk.boundary_suspect) {
            data.boundary_suspect_thetas.push_back(zk.theta);
            continue;
        }
        auto nc = norming_constant(q, zk.theta);
        data.discrete.thetas.push_back(zk.theta);
        data.discrete.c.push_back(nc.c);
    }
    data.density = make_density(data.coeffs);
    if (opts.window_refine) add_density_windows(data.density, q);
    return data;
}

double trace_formula_check(const GridFunction& q, const ScatteringData& data,
                           const std::vector<cplx>& probes) {
    double worst = 0.0;
    for (cplx z : probes) {
        cplx blaschke{1.0, 0.0};
        for (int k = 0; k < data.discrete.size(); ++k) {
            cplx zk = data.discrete.pole(k);
            blaschke *= (z - zk) / (z - std::conj(zk));
        }
        cplx integral = data.density.cauchy_full(z);
        cplx a_fact = blaschke * std::exp(-integral / (2.0 * M_PI * I));
        cplx a_dir = a_extend(q, z);
        worst = std::max(worst, std::abs(a_fact - a_dir) / std::abs(a_dir));
    }
    return worst;
}

double theta_condition_residual(const ScatteringData& data) {
    cplx lhs = data.discrete.product_z_sq();
    double integral = data.density.int_over_s_full();
    cplx rhs = -std::exp(cplx{0.0, -integral / (2.0 * M_PI)}); // 1/(2 pi i) = -i/(2 pi)
    return std::abs(lhs - rhs);
}

} // namespace nlslab
