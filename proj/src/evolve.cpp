#include "nlslab/evolve.hpp"

#include <fftw3.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace nlslab {

struct SplitStepSolver::Fft {
    fftw_plan fwd = nullptr, bwd = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;

    explicit Fft(int n_) : n(n_) {
        buf = fftw_alloc_complex(n);
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
};

SplitStepSolver::SplitStepSolver(const SpatialGrid& g) : grid_(g) {
    g.validate();
    tanh_.resize(g.n);
    sech2_.resize(g.n);
    k_.resize(g.n);
    const double dk = 2.0 * M_PI / g.length();
    for (int j = 0; j < g.n; ++j) {
        double x = g.x(j);
        tanh_[j] = std::tanh(x);
        double s = 1.0 / std::cosh(x);
        sech2_[j] = s * s;
        k_[j] = dk * (j <= g.n / 2 ? j : j - g.n);
    }
    fft_ = std::make_unique<Fft>(g.n);
}

SplitStepSolver::~SplitStepSolver() = default;

EvolutionState SplitStepSolver::init(const GridFunction& q0, double dt) const {
    q0.validate();
    if (!(q0.grid == grid_)) throw std::invalid_argument("SplitStepSolver: grid mismatch");
    if (!(dt > 0.0 && dt <= 1e-2)) throw std::invalid_argument("SplitStepSolver: need 0 < dt <= 1e-2");
    EvolutionState s;
    s.v = q0;
    s.dt = dt;
    for (int j = 0; j < grid_.n; ++j) s.v.values[j] -= tanh_[j];
    return s;
}

// dv/dt = -i [ 2(|v|^2 + 2 Re(v) tanh)(v + tanh) - 2 sech^2 v ]
void SplitStepSolver::nonlinear_half_step(EvolutionState& s) const {
    const double h = 0.5 * s.dt;
    auto& v = s.v.values;
    const int n = grid_.n;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        const double T = tanh_[j], S2 = sech2_[j];
        auto rhs = [&](cplx w) {
            return -I * (2.0 * (std::norm(w) + 2.0 * w.real() * T) * (w + T) - 2.0 * S2 * w);
        };
        cplx w = v[j];
        cplx k1 = rhs(w);
        cplx k2 = rhs(w + 0.5 * h * k1);
        cplx k3 = rhs(w + 0.5 * h * k2);
        cplx k4 = rhs(w + h * k3);
        v[j] = w + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

void SplitStepSolver::linear_full_step(EvolutionState& s) const {
    const int n = grid_.n;
    auto* buf = fft_->buf;
    for (int j = 0; j < n; ++j) {
        buf[j][0] = s.v.values[j].real();
        buf[j][1] = s.v.values[j].imag();
    }
    fftw_execute(fft_->fwd);
    // Drop modes beyond the 2/3 band and beyond the splitting resonance
    // k^2 dt = 2 pi; the nonlinear substep feeds those wavenumbers through
    // aliasing and they grow secularly over long runs.  The physical spectrum
    // of v is smooth and sits far below the cut.
    const double k_max = M_PI / grid_.h();
    const double k_keep = std::min(2.0 / 3.0 * k_max, 0.95 * std::sqrt(2.0 * M_PI / s.dt));
    for (int j = 0; j < n; ++j) {
        if (std::abs(k_[j]) > k_keep) {
            buf[j][0] = buf[j][1] = 0.0;
            continue;
        }
        // v_hat *= exp(-i k^2 dt) / n  (normalization folded in)
        double ph = -k_[j] * k_[j] * s.dt;
        double c = std::cos(ph) / n, si = std::sin(ph) / n;
        double re = buf[j][0], im = buf[j][1];
        buf[j][0] = re * c - im * si;
        buf[j][1] = re * si + im * c;
    }
    fftw_execute(fft_->bwd);
    for (int j = 0; j < n; ++j) s.v.values[j] = cplx{buf[j][0], buf[j][1]};
}

void SplitStepSolver::step(EvolutionState& s) const {
    nonlinear_half_step(s);
    linear_full_step(s);
    nonlinear_half_step(s);
    s.t += s.dt;
    if (!std::isfinite(std::norm(s.v.values[grid_.n / 2])))
        throw std::runtime_error("SplitStepSolver: non-finite state (blow-up?)");
}

GridFunction SplitStepSolver::q_of(const EvolutionState& s) const {
    GridFunction q = s.v;
    for (int j = 0; j < grid_.n; ++j) q.values[j] += tanh_[j];
    return q;
}

double SplitStepSolver::mass(const EvolutionState& s) const {
    double m = 0.0;
    for (int j = 0; j < grid_.n; ++j) m += 1.0 - std::norm(s.v.values[j] + tanh_[j]);
    return m * grid_.h();
}

double SplitStepSolver::boundary_magnitude(const EvolutionState& s) const {
    return std::max(std::abs(s.v.values.front()), std::abs(s.v.values.back()));
}

std::vector<GridFunction> evolve_snapshots(const GridFunction& q0,
                                           const std::vector<double>& times, double dt,
                                           MassTrace* trace) {
    SplitStepSolver solver(q0.grid);
    auto s = solver.init(q0, dt);
    std::vector<GridFunction> out;
    if (trace) {
        trace->t.push_back(0.0);
        trace->mass.push_back(solver.mass(s));
    }
    double t_prev = 0.0;
    for (double target : times) {
        if (target < t_prev) throw std::invalid_argument("evolve_snapshots: times must ascend");
        if (target > t_prev) {
            long steps = std::lround((target - t_prev) / dt);
            steps = std::max<long>(steps, 1);
            s.dt = (target - t_prev) / steps;
            for (long i = 0; i < steps; ++i) {
                solver.step(s);
                if (trace && (i % 100 == 0 || i == steps - 1)) {
                    trace->t.push_back(s.t);
                    trace->mass.push_back(solver.mass(s));
                }
            }
        }
        t_prev = target;
        out.push_back(solver.q_of(s));
    }
    return out;
}

GridFunction evolve_to(const GridFunction& q0, double t_final, double dt, MassTrace* trace) {
    if (t_final < 0.0) throw std::invalid_argument("evolve_to: t_final < 0");
    if (t_final == 0.0) return q0;
    return evolve_snapshots(q0, {t_final}, dt, trace).front();
}

void write_snapshot_csv(const std::string& path, const GridFunction& q) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_snapshot_csv: cannot open " + path);
    out << "x,re_q,im_q,abs2_q\n";
    out.precision(12);
    for (int j = 0; j < q.grid.n; ++j) {
        cplx v = q.values[j];
        out << q.grid.x(j) << ',' << v.real() << ',' << v.imag() << ',' << std::norm(v) << '\n';
    }
}

} // namespace nlslab
