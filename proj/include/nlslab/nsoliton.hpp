// Exact N-dark-soliton synthesis from reflectionless data.
//
// The partial-fraction ansatz for the meromorphic RHP solution reduces to the
// N x N linear system (row k)
//
//   beta_k - c_k(x,t) sum_j  zbar_j/(zbar_j - z_k) beta_j = c_k(x,t),
//   c_k(x,t) = c_k e^{Phi(z_k;x,t)},
//
// and q(x,t) = 1 + sum_k beta_k.  Under the reality condition
// c_k = i z_k |c_k| the same system takes the Hermitian positive-definite
// form (I + Y) bhat = b, which is the primary solve path.  Entries of Y grow
// like e^{Phi}; they are assembled from log-magnitudes, and when the phases
// leave the range representable in double the solver switches to a row-scaled
// LU formulation of the first system that stays bounded for any (x,t).
#pragma once

#include "nlslab/spectrum.hpp"

#include <Eigen/Dense>

namespace nlslab {

// Reflectionless scattering data; couplings must satisfy c_k = i z_k |c_k|.
struct SolitonSpec {
    DiscreteSpectrum discrete;

    int size() const { return discrete.size(); }
    void validate() const { discrete.validate(); }

    static SolitonSpec make(const std::vector<double>& thetas, const std::vector<double>& mags);
    // |c_k| = 2 Im z_k, which centers every soliton at x = 0 shift
    static SolitonSpec centered(const std::vector<double>& thetas);
};

struct SolitonLinearSystem {
    int N = 0;
    Eigen::VectorXcd c_tx;   // c_k e^{Phi_k}; may be non-finite for extreme phases
    Eigen::MatrixXcd Z;      // Z_jk = zbar_j / (zbar_j - z_k)
    Eigen::MatrixXcd Y;      // Hermitian form, assembled in log space
    Eigen::VectorXcd b;      // rhs of (I + Y) bhat = b
    std::vector<double> log_mag; // log |c_k(x,t)|
};

SolitonLinearSystem make_soliton_system(const SolitonSpec& spec, double x, double t);

double min_eigenvalue_Y(const SolitonSpec& spec, double x, double t);

// One dark soliton, -i z0 (i Re z0 + Im z0 tanh(Im z0 (x - x0 - 2 Re z0 t))).
cplx one_soliton(double x, double t, cplx z0, double x0);

// q^{(sol),N}(x,t); Hermitian solve with automatic row-scaled fallback.
cplx nsoliton_eval(const SolitonSpec& spec, double x, double t);

// Independent solve routes, for cross-checks.
cplx nsoliton_eval_hermitian(const SolitonSpec& spec, double x, double t);
cplx nsoliton_eval_rowscaled(const SolitonSpec& spec, double x, double t);
// Cramer determinant ratio of the raw system; overflows for large |Phi|,
// intended as a small-N test oracle.
cplx nsoliton_eval_cramer(const SolitonSpec& spec, double x, double t);

std::vector<cplx> nsoliton_profile(const SolitonSpec& spec, const std::vector<double>& xs,
                                   double t, Exec exec = Exec::parallel);

GridFunction nsoliton_grid(const SolitonSpec& spec, const SpatialGrid& g, double t,
                           Exec exec = Exec::parallel);

// Reflectionless separation shifts: x_k = (1/2 Im z_k) log(|c_k|/(2 Im z_k)
// prod_{l<k} |(z_k - z_l)/(z_k z_l - 1)|^2).
std::vector<double> separation_shifts(const SolitonSpec& spec);

// e^{i alpha1} [ 1 + sum_k (prod_{j<k} z_j^2) (sol(x - x_k, t; z_k) - 1) ]
cplx nsoliton_separation(const SolitonSpec& spec, const std::vector<double>& shifts,
                         double alpha1, double x, double t);

// |i q_t + q_xx - 2(|q|^2-1) q| at (x,t) by 4th-order finite differences.
double nsoliton_pde_residual(const SolitonSpec& spec, double x, double t,
                             double hx = 1e-2, double ht = 1e-2);

} // namespace nlslab
