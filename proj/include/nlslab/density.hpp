// Quadrature of integrals of f(s) = log(1 - |r(s)|^2) against the kernels
// that appear in the trace formula, the theta-condition, the T-function and
// the modified couplings.
//
// f is sampled on the spectral grid away from the excluded windows around
// +-1; generically |r| -> 1 there and f has an integrable logarithmic spike
// whose width is set by the residue a_pm of a(z).  Inside each window f is
// therefore resampled on log-spaced sub-nodes via 1 - |r|^2 = |a|^{-2}
// (a stays computable arbitrarily close to +-1), and the last stretch below
// eta_min is integrated with the analytic model f ~ 2 log eta - 2 log|a_pm|.
#pragma once

#include "nlslab/core.hpp"
#include "nlslab/zs.hpp"

namespace nlslab {

struct ReflectionDensity {
    // composite (s, f) samples, s ascending; sp > 0, sn < 0
    std::vector<double> sp, fp;
    std::vector<double> sn, fn;
    double eta_min = 1e-6;
    double abs_a_plus = 0.0;  // |res_{z=+1} a|; 0 disables the analytic tail
    double abs_a_minus = 0.0;

    bool empty() const { return sp.empty() && sn.empty(); }

    // int_0^inf f(s)/s ds
    double int_over_s_pos() const;
    // int_R f(s)/s ds
    double int_over_s_full() const;
    // int_0^inf f(s) ds
    double int_plain_pos() const;
    // int_0^inf f(s)/(s-z) ds; for z within pv_eps of (0,inf) the boundary
    // value PV + i pi sgn(Im z) f(Re z) is returned.
    cplx cauchy_pos(cplx z, double pv_eps = 1e-3) const;
    // int_R f(s)/(s-z) ds
    cplx cauchy_full(cplx z, double pv_eps = 1e-3) const;
    // int_0^inf f(s)/|s-zk|^2 ds
    double poisson_pos(cplx zk) const;
    // int_0^inf f(s) (1/(s-z) - 1/(2s)) ds, the exponent kernel of T
    cplx t_integral(cplx z, double pv_eps = 1e-3) const;

    double f_at_pos(double s) const; // linear interpolation on the positive branch
};

// Density from grid samples of r only (no window refinement).
ReflectionDensity make_density(const ScatteringCoefficients& sc);

// Window refinement: sample |a|^{-2} on log-spaced sub-nodes inside the
// excluded +-1 windows and record |a_pm| for the analytic tails.
void add_density_windows(ReflectionDensity& d, const GridFunction& q,
                         int subnodes = 28, double eta_min = 1e-6);

} // namespace nlslab
