// Shared numeric primitives: uniform spatial grids, complex grid functions,
// the logarithmically symmetric spectral grid, and the spectral maps
//   lambda(z) = (z + 1/z)/2,   zeta(z) = (z - 1/z)/2,
//   Phi(z;x,t) = i x (z - 1/z) - i t (z^2 - 1/z^2).
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace nlslab {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

// Uniform grid on [x_min, x_max) with n samples, x_j = x_min + j*h.
// n is required to be a power of two so the same grid feeds the FFT solver.
struct SpatialGrid {
    double x_min = -40.0;
    double x_max = 40.0;
    int n = 2048;

    SpatialGrid() = default;
    SpatialGrid(double a, double b, int n_) : x_min(a), x_max(b), n(n_) { validate(); }

    double h() const { return (x_max - x_min) / n; }
    double length() const { return x_max - x_min; }
    double x(int j) const { return x_min + j * h(); }

    void validate() const {
        if (!(x_min < x_max)) throw std::invalid_argument("SpatialGrid: x_min >= x_max");
        if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("SpatialGrid: n must be a power of two");
    }
    bool operator==(const SpatialGrid&) const = default;
};

// Complex samples of a field on a SpatialGrid.
struct GridFunction {
    SpatialGrid grid;
    std::vector<cplx> values;

    GridFunction() = default;
    explicit GridFunction(const SpatialGrid& g) : grid(g), values(g.n, cplx{}) {}

    void validate() const {
        grid.validate();
        if ((int)values.size() != grid.n) throw std::invalid_argument("GridFunction: values.size() != grid.n");
    }
};

// 6-point Lagrange interpolation of a grid function at an arbitrary x.
// Outside the sample range the nearest end value is returned (potentials have
// settled to their boundary values there).
cplx interp_value(const GridFunction& f, double x);

// Real spectral grid for the continuous spectrum R \ {-1,0,1}.
//
// Nodes come in exact inversion pairs: for every node z the node 1/z is also
// present (partner() maps between them), which makes the symmetry
// r(1/z) = conj(r(z)) testable without interpolation.  Half-widths delta0
// (around 0) and delta1 (around +-1) are excluded; the reflection data inside
// the +-1 windows is handled by the singular-window machinery in density.hpp.
struct SpectralGrid {
    std::vector<double> z;       // sorted ascending, negative then positive nodes
    std::vector<int> partner_;   // index of the node 1/z[i]
    double delta0 = 0.05;
    double delta1 = 0.02;

    int size() const { return (int)z.size(); }
    int partner(int i) const { return partner_[i]; }

    // Logarithmically spaced nodes exp(+-u_j) and -exp(+-u_j) with
    // u_j = (j+1/2) du covering |z| in (delta0, 1/delta0), minus the windows
    // around +-1.  per_side controls resolution: ~4*per_side nodes total.
    static SpectralGrid make(double delta0 = 0.05, double delta1 = 0.02, int per_side = 128,
                             bool include_negative = true);
};

inline cplx lambda(cplx z) {
    if (z == cplx{}) throw std::domain_error("lambda: z == 0");
    return 0.5 * (z + 1.0 / z);
}

inline cplx zeta(cplx z) {
    if (z == cplx{}) throw std::domain_error("zeta: z == 0");
    return 0.5 * (z - 1.0 / z);
}

// Oscillation phase of the jump relation and of the residue conditions.
// For z = e^{i theta} this is real and equals -4 t sin(theta) (xi - cos(theta))
// with xi = x/2t.
inline cplx phase_phi(cplx z, double x, double t) {
    if (z == cplx{}) throw std::domain_error("phase_phi: z == 0");
    cplx z2 = z * z;
    return I * (x * (z - 1.0 / z) - t * (z2 - 1.0 / z2));
}

// Real value of Phi on the unit circle, Phi(e^{i theta}) = -2 sin(theta) (x - 2 cos(theta) t).
inline double phase_phi_circle(double theta, double x, double t) {
    return -2.0 * std::sin(theta) * (x - 2.0 * std::cos(theta) * t);
}

} // namespace nlslab
