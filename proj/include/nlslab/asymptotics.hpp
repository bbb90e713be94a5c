// Closed-form long-time machinery: the partial transmission coefficient
// T(z, xi), the nabla/delta partition of the poles across the critical line
// Re z = xi, the acquired phase alpha(xi), the radiation-modified couplings
// c~_k, the soliton phase shifts x_k, and the regional leading-order value of
// the solution inside the light cone.
#pragma once

#include "nlslab/nsoliton.hpp"
#include "nlslab/spectrum.hpp"

namespace nlslab {

struct AsymptoticData {
    double xi = 0.0;
    std::vector<int> nabla, delta; // partition of {0..N-1}: Re z_j <= xi vs > xi
    int j0 = -1;                   // pole within rho of the critical line, else -1
    double rho = 0.1;
    double alpha_xi = 0.0;
    std::vector<cplx> c_tilde;     // couplings modified by the radiation
    std::vector<double> x_shifts;  // phase shifts at this xi
    cplx T_inf{1.0, 0.0};          // |T_inf| = 1
};

// Largest rho compatible with the pole configuration: half the minimal gap of
// Re z_k (and below min Im z_k), capped at 0.1.
double default_rho(const DiscreteSpectrum& disc);

// T(z, xi) = prod_{k in delta} (z - z_k)/(z z_k - 1)
//            * exp( -(1/2 pi i) int_0^inf log(1-|r|^2) (1/(s-z) - 1/(2s)) ds ).
cplx T_eval(const ScatteringData& data, double xi, cplx z);

cplx T_infinity(const ScatteringData& data, double xi);

AsymptoticData partition_and_phase(const ScatteringData& data, double xi, double rho);
inline AsymptoticData partition_and_phase(const ScatteringData& data, double xi) {
    return partition_and_phase(data, xi, default_rho(data.discrete));
}

// Reflectionless spec {z_k, c~_k} driving the Theorem-style predictor
// e^{i alpha(xi)} q^{(sol),N}; the c~_k do not depend on xi.
SolitonSpec modulated_spec(const ScatteringData& data);

// e^{i alpha(xi)} q^{(sol),N}(x,t) with the modified couplings, xi = x/2t.
cplx asymptotic_predictor(const ScatteringData& data, const SolitonSpec& modspec,
                          double x, double t);

// Explicit regional value: the pure phase plateau for j0 = -1, otherwise the
// single-pole reduction around z_{j0} (the delta branch goes through
// T'(z_{j0}) by central difference along the circle).
cplx leading_order(const AsymptoticData& asym, const ScatteringData& data, double x, double t);

// Phase shifts evaluated in each soliton's own frame (xi -> Re z_k), the form
// entering the separated representation.
std::vector<double> separation_shifts_with_radiation(const ScatteringData& data);

struct PhaseRegionReport {
    int checked = 0;
    int violations = 0;
    double worst_margin = 0.0; // min over samples of |Re Phi| - bound
};

// Monte Carlo check of the sector bounds
//   Re Phi >= +(t/4)(1-|xi|) F(|z|)^2 |sin 2 arg z|  in Omega_1 u Omega_3,
//   Re Phi <= -(same)                                in Omega_2 u Omega_4.
// Samples outside the aperture phi(xi) are ignored.
PhaseRegionReport check_phase_regions(double xi, double t, const std::vector<cplx>& samples,
                                      double theta0 = M_PI / 5);

} // namespace nlslab
