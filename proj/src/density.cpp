#include "nlslab/density.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

namespace {

double clamped_log_density(double r2) {
    return std::log1p(-std::min(r2, 1.0 - 1e-14));
}

// trapezoid of f * K over one branch
template <typename K, typename R>
R branch_integral(const std::vector<double>& s, const std::vector<double>& f, K kernel, R zero) {
    R acc = zero;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        R g0 = kernel(s[i]) * f[i];
        R g1 = kernel(s[i + 1]) * f[i + 1];
        acc += 0.5 * (s[i + 1] - s[i]) * (g0 + g1);
    }
    return acc;
}

// int_0^eta (2 log u - 2 log|a|) du, both sides of the singular point
double tail_value(double eta, double abs_a) {
    if (abs_a <= 0.0 || eta <= 0.0) return 0.0;
    return 2.0 * (2.0 * eta * (std::log(eta) - 1.0) - 2.0 * eta * std::log(abs_a));
}

} // namespace

double ReflectionDensity::int_over_s_pos() const {
    double v = branch_integral(sp, fp, [](double s) { return 1.0 / s; }, 0.0);
    return v + tail_value(eta_min, abs_a_plus); // kernel ~ 1 at s = 1
}

double ReflectionDensity::int_over_s_full() const {
    double v = int_over_s_pos();
    v += branch_integral(sn, fn, [](double s) { return 1.0 / s; }, 0.0);
    v += -1.0 * tail_value(eta_min, abs_a_minus); // kernel ~ -1 at s = -1
    return v;
}

double ReflectionDensity::int_plain_pos() const {
    double v = branch_integral(sp, fp, [](double) { return 1.0; }, 0.0);
    return v + tail_value(eta_min, abs_a_plus);
}

double ReflectionDensity::f_at_pos(double s) const {
    if (sp.empty()) return 0.0;
    auto it = std::lower_bound(sp.begin(), sp.end(), s);
    if (it == sp.begin()) return fp.front();
    if (it == sp.end()) return fp.back();
    size_t i = it - sp.begin();
    double w = (s - sp[i - 1]) / (sp[i] - sp[i - 1]);
    return (1.0 - w) * fp[i - 1] + w * fp[i];
}

namespace {

// PV int f(s)/(s-s0) ds over one branch by regularized subtraction:
// int (f(s)-f0)/(s-s0) ds + f0 log|(s_max-s0)/(s_min-s0)|.
double pv_branch(const std::vector<double>& s, const std::vector<double>& f, double s0, double f0) {
    if (s.size() < 2) return 0.0;
    auto g = [&](size_t i) {
        double ds = s[i] - s0;
        if (std::abs(ds) < 1e-14) {
            // slope of f at the node
            size_t a = i > 0 ? i - 1 : i, b = i + 1 < s.size() ? i + 1 : i;
            return (f[b] - f[a]) / (s[b] - s[a]);
        }
        return (f[i] - f0) / ds;
    };
    double acc = 0.0;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        acc += 0.5 * (s[i + 1] - s[i]) * (g(i) + g(i + 1));
    acc += f0 * std::log(std::abs((s.back() - s0) / (s.front() - s0)));
    return acc;
}

} // namespace

cplx ReflectionDensity::cauchy_pos(cplx z, double pv_eps) const {
    if (sp.empty()) return {};
    bool near_axis = std::abs(z.imag()) < pv_eps && z.real() > sp.front() && z.real() < sp.back();
    if (near_axis) {
        double s0 = z.real();
        double f0 = f_at_pos(s0);
        double pv = pv_branch(sp, fp, s0, f0);
        pv += tail_value(eta_min, abs_a_plus) / (1.0 - s0); // kernel frozen at s = 1
        double side = z.imag() >= 0.0 ? 1.0 : -1.0;
        return cplx{pv, side * M_PI * f0};
    }
    cplx v = branch_integral(sp, fp, [&](double s) { return 1.0 / (s - z); }, cplx{});
    v += tail_value(eta_min, abs_a_plus) / (1.0 - z);
    return v;
}

cplx ReflectionDensity::cauchy_full(cplx z, double pv_eps) const {
    cplx v = cauchy_pos(z, pv_eps);
    if (!sn.empty()) {
        bool near_axis = std::abs(z.imag()) < pv_eps && z.real() > sn.front() && z.real() < sn.back();
        if (near_axis) {
            double s0 = z.real();
            // mirror of f_at_pos on the negative branch
            auto it = std::lower_bound(sn.begin(), sn.end(), s0);
            double f0;
            if (it == sn.begin()) f0 = fn.front();
            else if (it == sn.end()) f0 = fn.back();
            else {
                size_t i = it - sn.begin();
                double w = (s0 - sn[i - 1]) / (sn[i] - sn[i - 1]);
                f0 = (1.0 - w) * fn[i - 1] + w * fn[i];
            }
            double pv = pv_branch(sn, fn, s0, f0);
            pv += tail_value(eta_min, abs_a_minus) / (-1.0 - s0);
            double side = z.imag() >= 0.0 ? 1.0 : -1.0;
            v += cplx{pv, side * M_PI * f0};
        } else {
            v += branch_integral(sn, fn, [&](double s) { return 1.0 / (s - z); }, cplx{});
            v += tail_value(eta_min, abs_a_minus) / (-1.0 - z);
        }
    }
    return v;
}

double ReflectionDensity::poisson_pos(cplx zk) const {
    double v = branch_integral(sp, fp, [&](double s) { return 1.0 / std::norm(s - zk); }, 0.0);
    return v + tail_value(eta_min, abs_a_plus) / std::norm(1.0 - zk);
}

cplx ReflectionDensity::t_integral(cplx z, double pv_eps) const {
    return cauchy_pos(z, pv_eps) - 0.5 * int_over_s_pos();
}

ReflectionDensity make_density(const ScatteringCoefficients& sc) {
    ReflectionDensity d;
    d.eta_min = 0.0;
    for (int i = 0; i < sc.grid.size(); ++i) {
        double s = sc.grid.z[i];
        double f = clamped_log_density(std::norm(sc.r[i]));
        if (s > 0) {
            d.sp.push_back(s);
            d.fp.push_back(f);
        } else {
            d.sn.push_back(s);
            d.fn.push_back(f);
        }
    }
    return d;
}

void add_density_windows(ReflectionDensity& d, const GridFunction& q, int subnodes, double eta_min) {
    const double delta1 = 0.04; // resample a bit beyond the excluded window
    d.eta_min = eta_min;
    const double ratio = std::pow(eta_min / delta1, 1.0 / (subnodes - 1));

    std::vector<double> etas(subnodes);
    for (int i = 0; i < subnodes; ++i) etas[i] = delta1 * std::pow(ratio, i);

    auto f_of = [&](double s) {
        cplx a = a_extend(q, s);
        return -2.0 * std::log(std::abs(a));
    };

    std::vector<double> s_new;
    for (double e : etas) {
        s_new.push_back(1.0 - e);
        s_new.push_back(1.0 + e);
        s_new.push_back(-1.0 - e);
        s_new.push_back(-1.0 + e);
    }
    std::vector<double> f_new(s_new.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)s_new.size(); ++i) f_new[i] = f_of(s_new[i]);

    for (size_t i = 0; i < s_new.size(); ++i) {
        if (s_new[i] > 0) {
            d.sp.push_back(s_new[i]);
            d.fp.push_back(f_new[i]);
        } else {
            d.sn.push_back(s_new[i]);
            d.fn.push_back(f_new[i]);
        }
    }
    auto sort_branch = [](std::vector<double>& s, std::vector<double>& f) {
        std::vector<size_t> idx(s.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return s[a] < s[b]; });
        std::vector<double> s2(s.size()), f2(f.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            s2[i] = s[idx[i]];
            f2[i] = f[idx[i]];
        }
        s.swap(s2);
        f.swap(f2);
    };
    sort_branch(d.sp, d.fp);
    sort_branch(d.sn, d.fn);

    // The log-spike tail model only applies when the residue is resolvable;
    // for (numerically) reflectionless data a_pm ~ 0 and f stays bounded, so
    // the sub-eta_min gap contributes nothing.
    double ap = 0.5 * std::abs(wronskian(q, 1.0));
    double am = 0.5 * std::abs(wronskian(q, -1.0));
    d.abs_a_plus = ap > 10.0 * eta_min ? ap : 0.0;
    d.abs_a_minus = am > 10.0 * eta_min ? am : 0.0;
}

} // namespace nlslab
