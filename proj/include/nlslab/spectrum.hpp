// Discrete spectrum on the unit circle: locating the zeros of a(z), the
// connection/norming constants, the trace-formula factorization and the
// theta-condition.
#pragma once

#include "nlslab/density.hpp"
#include "nlslab/zs.hpp"

namespace nlslab {

// Poles z_k = e^{i theta_k} with couplings c_k = i z_k |c_k|.
// thetas ascend, which orders Re z_0 > Re z_1 > ...
struct DiscreteSpectrum {
    std::vector<double> thetas;
    std::vector<cplx> c;

    int size() const { return (int)thetas.size(); }
    cplx pole(int k) const { return std::polar(1.0, thetas[k]); }
    cplx product_z_sq() const;
    void validate() const;
};

struct ScatteringData {
    ScatteringCoefficients coeffs;
    DiscreteSpectrum discrete;
    ReflectionDensity density;
    std::vector<double> boundary_suspect_thetas; // zeros straddling the +-1 windows
};

struct CircleZero {
    double theta;
    bool boundary_suspect;
};

// All theta in (0, pi) with a(e^{i theta}) = 0, by uniform |W| scan with
// local-minimum bracketing and complex secant refinement of the Wronskian.
std::vector<CircleZero> find_circle_zeros(const GridFunction& q, int n_scan = 512,
                                          double delta1 = 0.02);

struct NormingConstant {
    cplx c;          // projected onto the ray i z_k R_+
    cplx c_ratio;    // gamma_k / a'(z_k)
    cplx c_integral; // 2 i z_k / int |psi_2^+|^2 dx
    cplx gamma;
    cplx a_prime;
    double mismatch; // relative disagreement of the two routes
};

// Coupling constant at a verified zero e^{i theta}.  Throws if the two
// routes disagree beyond 5e-3 (inaccurate zero or truncation).
NormingConstant norming_constant(const GridFunction& q, double theta);

struct ForwardOptions {
    int n_scan = 512;
    Exec exec = Exec::parallel;
    bool window_refine = true;
};

// Full forward transform: reflection data on the grid, discrete spectrum,
// couplings, and the window-refined density for singular quadrature.
ScatteringData forward_scattering(const GridFunction& q, const SpectralGrid& grid,
                                  const ForwardOptions& opts = {});

// Max relative residual of the inner-outer factorization of a(z) at the
// probe points, against a_extend.
double trace_formula_check(const GridFunction& q, const ScatteringData& data,
                           const std::vector<cplx>& probes = {cplx{0, 2}, cplx{1, 1}});

// | prod z_k^2 + exp( (1/2 pi i) int_R log(1-|r|^2)/s ds ) |
double theta_condition_residual(const ScatteringData& data);

} // namespace nlslab
