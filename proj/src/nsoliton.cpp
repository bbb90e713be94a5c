#include "nlslab/nsoliton.hpp"

#include <cmath>

namespace nlslab {

SolitonSpec SolitonSpec::make(const std::vector<double>& thetas, const std::vector<double>& mags) {
    if (thetas.size() != mags.size()) throw std::invalid_argument("SolitonSpec: size mismatch");
    SolitonSpec spec;
    spec.discrete.thetas = thetas;
    std::sort(spec.discrete.thetas.begin(), spec.discrete.thetas.end());
    for (size_t k = 0; k < thetas.size(); ++k)
        spec.discrete.c.push_back(I * std::polar(1.0, spec.discrete.thetas[k]) * mags[k]);
    spec.validate();
    return spec;
}

SolitonSpec SolitonSpec::centered(const std::vector<double>& thetas) {
    std::vector<double> mags;
    for (double th : thetas) mags.push_back(2.0 * std::sin(th));
    return make(thetas, mags);
}

cplx one_soliton(double x, double t, cplx z0, double x0) {
    double zr = z0.real(), zi = z0.imag();
    return -I * z0 * (I * zr + zi * std::tanh(zi * (x - x0 - 2.0 * zr * t)));
}

SolitonLinearSystem make_soliton_system(const SolitonSpec& spec, double x, double t) {
    spec.validate();
    const int N = spec.size();
    SolitonLinearSystem sys;
    sys.N = N;
    sys.c_tx.resize(N);
    sys.Z.resize(N, N);
    sys.Y.resize(N, N);
    sys.b.resize(N);
    sys.log_mag.resize(N);

    for (int k = 0; k < N; ++k) {
        cplx zk = spec.discrete.pole(k);
        double phi = phase_phi_circle(spec.discrete.thetas[k], x, t);
        sys.log_mag[k] = std::log(std::abs(spec.discrete.c[k])) + phi;
        sys.c_tx[k] = spec.discrete.c[k] * std::exp(phi);
        sys.b[k] = I * zk * std::exp(0.5 * sys.log_mag[k]);
    }
    for (int j = 0; j < N; ++j) {
        cplx zbj = std::conj(spec.discrete.pole(j));
        for (int k = 0; k < N; ++k) {
            cplx zk = spec.discrete.pole(k);
            sys.Z(j, k) = zbj / (zbj - zk);
        }
    }
    for (int k = 0; k < N; ++k) {
        cplx zbk = std::conj(spec.discrete.pole(k));
        for (int j = 0; j < N; ++j) {
            cplx zj = spec.discrete.pole(j);
            // |c_k c_j|^{1/2} e^{(Phi_k+Phi_j)/2} / (i (zbar_k - z_j))
            double mag = 0.5 * (sys.log_mag[k] + sys.log_mag[j]);
            sys.Y(k, j) = std::exp(mag) / (I * (zbk - zj));
        }
    }
    return sys;
}

double min_eigenvalue_Y(const SolitonSpec& spec, double x, double t) {
    auto sys = make_soliton_system(spec, x, t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sys.Y);
    return es.eigenvalues().minCoeff();
}

namespace {

cplx assemble_q(const Eigen::VectorXcd& beta) {
    cplx q{1.0, 0.0};
    for (int k = 0; k < beta.size(); ++k) q += beta[k];
    return q;
}

double max_log_mag(const SolitonLinearSystem& sys) {
    double m = -1e300;
    for (double v : sys.log_mag) m = std::max(m, v);
    return m;
}

} // namespace

cplx nsoliton_eval_hermitian(const SolitonSpec& spec, double x, double t) {
    auto sys = make_soliton_system(spec, x, t);
    if (sys.N == 0) return {1.0, 0.0};
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(sys.N, sys.N) + sys.Y;
    Eigen::LLT<Eigen::MatrixXcd> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("nsoliton_eval: (I + Y) not positive definite (invalid spec)");
    Eigen::VectorXcd bhat = llt.solve(sys.b);
    cplx q{1.0, 0.0};
    for (int k = 0; k < sys.N; ++k) q += std::exp(0.5 * sys.log_mag[k]) * bhat[k];
    return q;
}

cplx nsoliton_eval_rowscaled(const SolitonSpec& spec, double x, double t) {
    spec.validate();
    const int N = spec.size();
    if (N == 0) return {1.0, 0.0};
    Eigen::MatrixXcd A(N, N);
    Eigen::VectorXcd rhs(N);
    for (int k = 0; k < N; ++k) {
        cplx zk = spec.discrete.pole(k);
        double lm = std::log(std::abs(spec.discrete.c[k])) + phase_phi_circle(spec.discrete.thetas[k], x, t);
        cplx phase = spec.discrete.c[k] / std::abs(spec.discrete.c[k]);
        for (int j = 0; j < N; ++j) {
            cplx zbj = std::conj(spec.discrete.pole(j));
            A(k, j) = -zbj / (zbj - zk);
        }
        if (lm <= 0.0) {
            // beta_k - c_k(x,t) sum_j K beta_j = c_k(x,t)
            cplx ck = phase * std::exp(lm);
            for (int j = 0; j < N; ++j) A(k, j) *= ck;
            A(k, k) += 1.0;
            rhs[k] = ck;
        } else {
            // divide the row by c_k(x,t)
            A(k, k) += std::exp(-lm) / phase;
            rhs[k] = 1.0;
        }
    }
    Eigen::VectorXcd beta = A.partialPivLu().solve(rhs);
    return assemble_q(beta);
}

cplx nsoliton_eval(const SolitonSpec& spec, double x, double t) {
    if (spec.size() == 0) return {1.0, 0.0};
    auto sys = make_soliton_system(spec, x, t);
    // for large phases the Hermitian solve loses accuracy to its condition
    // number (and eventually overflows); the row-scaled form stays bounded
    if (max_log_mag(sys) <= 40.0) {
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(sys.N, sys.N) + sys.Y;
        Eigen::LLT<Eigen::MatrixXcd> llt(A);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("nsoliton_eval: (I + Y) not positive definite (invalid spec)");
        Eigen::VectorXcd bhat = llt.solve(sys.b);
        cplx q{1.0, 0.0};
        for (int k = 0; k < sys.N; ++k) q += std::exp(0.5 * sys.log_mag[k]) * bhat[k];
        return q;
    }
    return nsoliton_eval_rowscaled(spec, x, t);
}

cplx nsoliton_eval_cramer(const SolitonSpec& spec, double x, double t) {
    const int N = spec.size();
    if (N == 0) return {1.0, 0.0};
    auto sys = make_soliton_system(spec, x, t);
    // raw system matrix: row k of (I - C Z^T)
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(N, N);
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) B(k, j) -= sys.c_tx[k] * sys.Z(j, k);
    Eigen::MatrixXcd Bord(N + 1, N + 1);
    Bord.topLeftCorner(N, N) = B;
    for (int k = 0; k < N; ++k) {
        Bord(k, N) = -sys.c_tx[k];
        Bord(N, k) = -1.0;
    }
    Bord(N, N) = 0.0;
    // q = 1 - det(Bord)/det(B): the border encodes 1 + 1^T B^{-1} c
    return 1.0 - Bord.determinant() / B.determinant();
}

std::vector<cplx> nsoliton_profile(const SolitonSpec& spec, const std::vector<double>& xs,
                                   double t, Exec exec) {
    std::vector<cplx> out(xs.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < (int)xs.size(); ++i) out[i] = nsoliton_eval(spec, xs[i], t);
    } else {
        for (int i = 0; i < (int)xs.size(); ++i) out[i] = nsoliton_eval(spec, xs[i], t);
    }
    return out;
}

GridFunction nsoliton_grid(const SolitonSpec& spec, const SpatialGrid& g, double t, Exec exec) {
    GridFunction q(g);
    std::vector<double> xs(g.n);
    for (int j = 0; j < g.n; ++j) xs[j] = g.x(j);
    auto vals = nsoliton_profile(spec, xs, t, exec);
    q.values = std::move(vals);
    return q;
}

std::vector<double> separation_shifts(const SolitonSpec& spec) {
    const int N = spec.size();
    std::vector<double> xk(N);
    for (int k = 0; k < N; ++k) {
        cplx zk = spec.discrete.pole(k);
        double im = zk.imag();
        double logprod = 0.0;
        for (int l = 0; l < k; ++l) {
            cplx zl = spec.discrete.pole(l);
            logprod += 2.0 * std::log(std::abs((zk - zl) / (zk * zl - 1.0)));
        }
        xk[k] = (std::log(std::abs(spec.discrete.c[k]) / (2.0 * im)) + logprod) / (2.0 * im);
    }
    return xk;
}

cplx nsoliton_separation(const SolitonSpec& spec, const std::vector<double>& shifts,
                         double alpha1, double x, double t) {
    cplx acc{1.0, 0.0};
    cplx zprod{1.0, 0.0};
    for (int k = 0; k < spec.size(); ++k) {
        cplx zk = spec.discrete.pole(k);
        acc += zprod * (one_soliton(x, t, zk, shifts[k]) - 1.0);
        zprod *= zk * zk;
    }
    return std::exp(I * alpha1) * acc;
}

double nsoliton_pde_residual(const SolitonSpec& spec, double x, double t, double hx, double ht) {
    auto q = [&](double xx, double tt) { return nsoliton_eval(spec, xx, tt); };
    cplx q0 = q(x, t);
    cplx qt = (-q(x, t + 2 * ht) + 8.0 * q(x, t + ht) - 8.0 * q(x, t - ht) + q(x, t - 2 * ht)) / (12.0 * ht);
    cplx qxx = (-q(x + 2 * hx, t) + 16.0 * q(x + hx, t) - 30.0 * q0 + 16.0 * q(x - hx, t) - q(x - 2 * hx, t)) /
               (12.0 * hx * hx);
    cplx res = I * qt + qxx - 2.0 * (std::norm(q0) - 1.0) * q0;
    return std::abs(res);
}

} // namespace nlslab
