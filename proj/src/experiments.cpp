#include "nlslab/experiments.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>

namespace nlslab {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

std::string ExperimentReport::to_json() const {
    json j;
    j["schema"] = "nlslab.report/1";
    j["name"] = name;
    j["columns"] = columns;
    j["table"] = table;
    j["fitted_slope"] = fitted_slope;
    j["pass"] = pass;
    j["inconclusive"] = inconclusive;
    j["runtime_seconds"] = runtime_seconds;
    j["notes"] = notes;
    return j.dump(2);
}

void ExperimentReport::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("ExperimentReport: cannot open " + path);
    for (size_t i = 0; i < columns.size(); ++i) out << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
    out.precision(12);
    for (const auto& row : table) {
        for (size_t i = 0; i < row.size(); ++i) out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
}

namespace {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0)) continue;
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

ExperimentReport verify_theorem1(const GridFunction& q0, const std::vector<double>& xi_list,
                                 const std::vector<double>& t_list, const ExperimentOptions& opts) {
    auto tic = clock_type::now();
    ExperimentReport rep;
    rep.name = "theorem1";
    rep.columns = {"t", "err_predictor", "err_leading_order"};

    auto grid = SpectralGrid::make(opts.delta0, opts.delta1, opts.z_per_side);
    ForwardOptions fw;
    fw.n_scan = opts.n_scan;
    auto data = forward_scattering(q0, grid, fw);
    auto mod = modulated_spec(data);
    double rho = default_rho(data.discrete);

    // xi samples: requested values outside the rho-strips, plus every
    // soliton center line (both j0 branches of the regional formulas)
    std::vector<double> xis;
    for (double xi : xi_list) {
        bool near = false;
        for (int k = 0; k < data.discrete.size(); ++k)
            near |= std::abs(data.discrete.pole(k).real() - xi) < rho;
        if (!near) xis.push_back(xi);
    }
    for (int k = 0; k < data.discrete.size(); ++k) xis.push_back(data.discrete.pole(k).real());

    auto snaps = evolve_snapshots(q0, t_list, opts.dt);

    std::vector<double> ts, errs;
    for (size_t it = 0; it < t_list.size(); ++it) {
        double t = t_list[it];
        double e_pred = 0.0, e_lead = 0.0;
        for (double xi : xis) {
            double x = 2.0 * xi * t;
            cplx qn = interp_value(snaps[it], x);
            e_pred = std::max(e_pred, std::abs(qn - asymptotic_predictor(data, mod, x, t)));
            auto asym = partition_and_phase(data, xi, rho);
            e_lead = std::max(e_lead, std::abs(qn - leading_order(asym, data, x, t)));
        }
        rep.table.push_back({t, e_pred, e_lead});
        ts.push_back(t);
        errs.push_back(e_pred);
    }
    rep.fitted_slope = loglog_slope(ts, errs);
    double max_err = *std::max_element(errs.begin(), errs.end());
    // reflectionless inputs sit at the solver noise floor with no decay to fit
    rep.pass = rep.fitted_slope <= -0.8 || max_err < 1e-4;
    rep.runtime_seconds = std::chrono::duration<double>(clock_type::now() - tic).count();
    return rep;
}

ExperimentReport verify_theorem2(const SolitonSpec& spec, const GridFunction& f, double eps,
                                 const ExperimentOptions& opts) {
    auto tic = clock_type::now();
    ExperimentReport rep;
    rep.name = "theorem2";
    rep.columns = {"eps", "max_main_dev", "max_extra_dev", "n_extra"};

    const int M = spec.size();
    for (double e : {eps, 0.5 * eps}) {
        GridFunction q0 = nsoliton_grid(spec, f.grid, 0.0);
        for (int j = 0; j < f.grid.n; ++j) q0.values[j] += e * f.values[j];

        auto zeros = find_circle_zeros(q0, std::max(opts.n_scan, 4096));
        // classify: extras hug +-1, main poles track the originals
        const double margin = 0.3;
        std::vector<double> main_thetas;
        double extra_dev = 0.0;
        int n_extra = 0;
        for (auto& zk : zeros) {
            if (zk.theta < margin || M_PI - zk.theta < margin) {
                ++n_extra;
                cplx z = std::polar(1.0, zk.theta);
                extra_dev = std::max(extra_dev, std::min(std::abs(z - 1.0), std::abs(z + 1.0)));
            } else {
                main_thetas.push_back(zk.theta);
            }
        }
        if ((int)main_thetas.size() != M) {
            rep.inconclusive = true;
            rep.notes = "pole matching ambiguous";
            break;
        }
        double main_dev = 0.0;
        for (int k = 0; k < M; ++k) {
            auto nc = norming_constant(q0, main_thetas[k]);
            main_dev = std::max(main_dev, std::abs(std::polar(1.0, main_thetas[k]) - spec.discrete.pole(k)) +
                                               std::abs(nc.c - spec.discrete.c[k]));
        }
        rep.table.push_back({e, main_dev, extra_dev, (double)n_extra});
    }
    if (!rep.inconclusive && rep.table.size() == 2) {
        // deviations must scale linearly: halving eps roughly halves them
        double r_main = rep.table[0][1] / std::max(rep.table[1][1], 1e-300);
        bool extras_ok = rep.table[0][2] < 10.0 * eps && rep.table[1][2] < 10.0 * eps;
        rep.pass = r_main > 1.4 && r_main < 2.9 && extras_ok;
        rep.fitted_slope = std::log(r_main) / std::log(2.0);
    }
    rep.runtime_seconds = std::chrono::duration<double>(clock_type::now() - tic).count();
    return rep;
}

double appendixC_C(const GridFunction& f, int sign) {
    // C(+-, f) = int ((e^{-4y} - 1) f_R +- 2 e^{-2y} f_I) / (1 + e^{-2y})^2 dy
    double acc = 0.0;
    const auto& g = f.grid;
    for (int j = 0; j < g.n; ++j) {
        double y = g.x(j);
        double e2 = std::exp(-2.0 * y);
        double den = (1.0 + e2) * (1.0 + e2);
        double kernel_r = (e2 * e2 - 1.0) / den; // = -tanh(y)
        double kernel_i = sign * 2.0 * e2 / den;
        acc += kernel_r * f.values[j].real() + kernel_i * f.values[j].imag();
    }
    return acc * g.h();
}

NewtonZero wronskian_newton(const GridFunction& q, cplx z0, int max_iter) {
    NewtonZero out;
    out.z = z0;
    const double h = 1e-6;
    cplx w = wronskian(q, out.z);
    for (int it = 0; it < max_iter; ++it) {
        out.iterations = it + 1;
        cplx dw = (wronskian(q, out.z + h) - wronskian(q, out.z - h)) / (2.0 * h);
        if (std::abs(dw) == 0.0) break;
        cplx step = w / dw;
        double damp = 1.0;
        for (int k = 0; k < 8; ++k) {
            cplx z_new = out.z - damp * step;
            cplx w_new = wronskian(q, z_new);
            if (std::abs(w_new) < std::abs(w)) {
                out.z = z_new;
                w = w_new;
                break;
            }
            damp *= 0.5;
        }
        if (std::abs(step) < 1e-12 || std::abs(w) < 1e-13) {
            out.found = true;
            break;
        }
    }
    out.found = out.found || std::abs(w) < 1e-10;
    return out;
}

ExperimentReport appendixC_zero(const GridFunction& f, const std::vector<double>& eps_list,
                                const ExperimentOptions& opts) {
    (void)opts;
    auto tic = clock_type::now();
    ExperimentReport rep;
    rep.name = "appendixC";
    rep.columns = {"eps", "defect", "ratio"};

    double C = appendixC_C(f, +1);
    rep.notes = "C(+,f) = " + std::to_string(C);

    double prev = 0.0;
    bool all_found = true;
    std::vector<double> ratios;
    for (double eps : eps_list) {
        GridFunction q0 = f;
        for (int j = 0; j < f.grid.n; ++j)
            q0.values[j] = std::tanh(f.grid.x(j)) + eps * f.values[j];
        cplx target = 1.0 + I * eps * C;
        auto nz = wronskian_newton(q0, target);
        all_found &= nz.found;
        double defect = std::abs(nz.z - target);
        double ratio = prev > 0 ? defect / prev : 0.0;
        if (prev > 0) ratios.push_back(ratio);
        rep.table.push_back({eps, defect, ratio});
        prev = defect;
    }
    bool ratios_ok = !ratios.empty();
    for (double r : ratios) ratios_ok &= (r > 3.0 && r < 5.0);
    rep.pass = all_found && ratios_ok;
    if (!all_found) rep.notes += "; newton did not converge (zero may lie below the axis)";
    rep.runtime_seconds = std::chrono::duration<double>(clock_type::now() - tic).count();
    return rep;
}

ExperimentReport coeffevo_check(const GridFunction& q0, double t, const ExperimentOptions& opts) {
    auto tic = clock_type::now();
    ExperimentReport rep;
    rep.name = "coeffevo";
    rep.columns = {"z", "err_a", "err_b"};

    auto grid = SpectralGrid::make(opts.delta0, opts.delta1, opts.z_per_side);
    auto s0 = scattering_coefficients(q0, grid);
    auto q1 = evolve_to(q0, t, opts.dt);
    auto s1 = scattering_coefficients(q1, grid);

    double worst = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        double z = grid.z[i];
        cplx unrot = std::exp(4.0 * I * zeta(z) * lambda(z) * t);
        double ea = std::abs(s1.a[i] - s0.a[i]);
        double eb = std::abs(s1.b[i] * unrot - s0.b[i]);
        rep.table.push_back({z, ea, eb});
        worst = std::max(worst, std::max(ea, eb));
    }
    rep.pass = worst <= 5e-3;
    rep.notes = "max node error " + std::to_string(worst);
    rep.runtime_seconds = std::chrono::duration<double>(clock_type::now() - tic).count();
    return rep;
}

} // namespace nlslab
