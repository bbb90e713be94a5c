#include "nlslab/asymptotics.hpp"

#include <cmath>

namespace nlslab {

namespace {

std::vector<int> delta_set(const DiscreteSpectrum& disc, double xi) {
    std::vector<int> idx;
    for (int k = 0; k < disc.size(); ++k)
        if (disc.pole(k).real() > xi) idx.push_back(k);
    return idx;
}

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

} // namespace

double default_rho(const DiscreteSpectrum& disc) {
    double rho = 0.1;
    for (int k = 0; k + 1 < disc.size(); ++k)
        rho = std::min(rho, 0.5 * (disc.pole(k).real() - disc.pole(k + 1).real()));
    for (int k = 0; k < disc.size(); ++k) rho = std::min(rho, 0.99 * disc.pole(k).imag());
    return rho;
}

cplx T_eval(const ScatteringData& data, double xi, cplx z) {
    if (std::abs(z) == 0.0) throw std::domain_error("T_eval: z == 0");
    cplx blaschke{1.0, 0.0};
    for (int k : delta_set(data.discrete, xi)) {
        cplx zk = data.discrete.pole(k);
        cplx num = z - zk, den = z * zk - 1.0;
        if (std::abs(num) < 1e-8 || std::abs(den) < 1e-8)
            throw std::domain_error("T_eval: z at a zero/pole of T");
        blaschke *= num / den;
    }
    cplx integral = data.density.t_integral(z);
    return blaschke * std::exp(-integral / (2.0 * M_PI * I));
}

cplx T_infinity(const ScatteringData& data, double xi) {
    cplx prod{1.0, 0.0};
    for (int k : delta_set(data.discrete, xi)) prod *= std::conj(data.discrete.pole(k));
    double integral = data.density.int_over_s_pos();
    // (1/4 pi i) int f/s ds = -i integral / (4 pi)
    return prod * std::exp(cplx{0.0, -integral / (4.0 * M_PI)});
}

AsymptoticData partition_and_phase(const ScatteringData& data, double xi, double rho) {
    const auto& disc = data.discrete;
    const int N = disc.size();
    if (!(rho > 0.0)) throw std::invalid_argument("partition_and_phase: rho <= 0");
    for (int k = 0; k + 1 < N; ++k)
        if (disc.pole(k).real() - disc.pole(k + 1).real() <= 2.0 * rho)
            throw std::invalid_argument("partition_and_phase: rho violates the disjoint-strip condition");
    for (int k = 0; k < N; ++k)
        if (disc.pole(k).imag() <= rho)
            throw std::invalid_argument("partition_and_phase: rho exceeds min Im z_k");

    AsymptoticData out;
    out.xi = xi;
    out.rho = rho;
    for (int k = 0; k < N; ++k) {
        if (disc.pole(k).real() > xi) out.delta.push_back(k);
        else out.nabla.push_back(k);
        if (std::abs(disc.pole(k).real() - xi) < rho) out.j0 = k;
    }

    double base = data.density.int_over_s_pos() / (2.0 * M_PI);
    out.alpha_xi = base;
    for (int k : out.delta) out.alpha_xi += 2.0 * disc.thetas[k];

    out.T_inf = T_infinity(data, xi);

    // c~_j = c_j exp(-(1/ i pi) int f (1/(s-z_j) - 1/(2s)) ds); the exponent
    // is purely real, so after quadrature the value is projected back onto
    // the admissible ray i z_j R_+.
    for (int k = 0; k < N; ++k) {
        cplx zk = disc.pole(k);
        cplx expo = -data.density.t_integral(zk) / (I * M_PI);
        cplx raw = disc.c[k] * std::exp(expo);
        out.c_tilde.push_back(I * zk * std::abs(raw));
    }

    // x_k: soliton-interaction log-product over delta \ {k} plus the
    // radiation retardation integral
    for (int k = 0; k < N; ++k) {
        cplx zk = disc.pole(k);
        double im = zk.imag();
        double logs = std::log(std::abs(disc.c[k]) / (2.0 * im));
        for (int l : out.delta) {
            if (l == k) continue;
            cplx zl = disc.pole(l);
            logs += 2.0 * std::log(std::abs((zk - zl) / (zk * zl - 1.0)));
        }
        logs -= im / M_PI * data.density.poisson_pos(zk);
        out.x_shifts.push_back(logs / (2.0 * im));
    }
    return out;
}

SolitonSpec modulated_spec(const ScatteringData& data) {
    auto asym = partition_and_phase(data, 0.0, default_rho(data.discrete));
    SolitonSpec spec;
    spec.discrete.thetas = data.discrete.thetas;
    spec.discrete.c = asym.c_tilde;
    return spec;
}

cplx asymptotic_predictor(const ScatteringData& data, const SolitonSpec& modspec,
                          double x, double t) {
    // The prefactor is alpha(1), the radiation integral alone: the discrete
    // phase jumps of alpha(xi) are already carried by the plateaus of
    // q^{(sol),N} itself (its value between solitons is prod_{delta} z_k^2,
    // which combines with e^{i alpha(1)} into T(infinity, xi)^{-2}).
    double alpha1 = data.density.int_over_s_pos() / (2.0 * M_PI);
    return std::exp(I * alpha1) * nsoliton_eval(modspec, x, t);
}

cplx leading_order(const AsymptoticData& asym, const ScatteringData& data, double x, double t) {
    cplx pref = 1.0 / (asym.T_inf * asym.T_inf);
    if (asym.j0 < 0) return pref;

    const int j0 = asym.j0;
    cplx zj = data.discrete.pole(j0);
    double im = zj.imag();
    double phi_big = phase_phi_circle(data.discrete.thetas[j0], x, t);
    bool in_delta = false;
    for (int k : asym.delta) in_delta |= (k == j0);

    if (!in_delta) {
        // e^{-2 phi} = |c_{j0} T(z_{j0})^2| e^{Phi} / (2 Im z_{j0})
        cplx Tz = T_eval(data, asym.xi, zj);
        double log_e_m2phi =
            std::log(std::abs(data.discrete.c[j0]) * std::norm(Tz) / (2.0 * im)) + phi_big;
        cplx beta = 2.0 * I * im * zj * sigmoid(log_e_m2phi);
        return pref * (1.0 + beta);
    }
    // j0 in delta: residue coefficient c_{j0}^{-1} T'(z_{j0})^{-2};
    // T' by central difference along the circle
    const double h = 1e-5;
    cplx Tp = (T_eval(data, asym.xi, zj * std::polar(1.0, h)) -
               T_eval(data, asym.xi, zj * std::polar(1.0, -h))) /
              (zj * cplx{0.0, 2.0 * std::sin(h)});
    double log_e_2phi =
        -std::log(std::abs(data.discrete.c[j0]) * std::norm(Tp) * (2.0 * im)) - phi_big;
    cplx beta = -2.0 * I * im * std::conj(zj) * sigmoid(log_e_2phi);
    return pref * (1.0 + beta);
}

std::vector<double> separation_shifts_with_radiation(const ScatteringData& data) {
    const auto& disc = data.discrete;
    std::vector<double> xk(disc.size());
    for (int k = 0; k < disc.size(); ++k) {
        cplx zk = disc.pole(k);
        double im = zk.imag();
        double logs = std::log(std::abs(disc.c[k]) / (2.0 * im));
        for (int l = 0; l < k; ++l) {
            cplx zl = disc.pole(l);
            logs += 2.0 * std::log(std::abs((zk - zl) / (zk * zl - 1.0)));
        }
        logs -= im / M_PI * data.density.poisson_pos(zk);
        xk[k] = logs / (2.0 * im);
    }
    return xk;
}

PhaseRegionReport check_phase_regions(double xi, double t, const std::vector<cplx>& samples,
                                      double theta0) {
    if (!(std::abs(xi) < 1.0)) throw std::invalid_argument("check_phase_regions: |xi| >= 1");
    double aperture = std::min(theta0, std::acos(2.0 * std::abs(xi) / (1.0 + std::abs(xi))));
    PhaseRegionReport rep;
    rep.worst_margin = 1e300;
    for (cplx z : samples) {
        if (z == cplx{}) continue;
        double arg = std::arg(z);
        int sign = 0; // +1: lower bound (Omega_1/3), -1: upper bound (Omega_2/4)
        if ((arg > 0 && arg < aperture) || (arg > -M_PI && arg < -M_PI + aperture)) sign = +1;
        else if ((arg > M_PI - aperture && arg < M_PI) || (arg > -aperture && arg < 0)) sign = -1;
        else continue;

        double F = std::abs(z) + 1.0 / std::abs(z);
        double bound = 0.25 * t * (1.0 - std::abs(xi)) * F * F * std::abs(std::sin(2.0 * arg));
        double re_phi = phase_phi(z, 2.0 * xi * t, t).real();
        double margin = sign * re_phi - bound;
        ++rep.checked;
        if (margin < 0.0) ++rep.violations;
        rep.worst_margin = std::min(rep.worst_margin, margin);
    }
    return rep;
}

} // namespace nlslab
