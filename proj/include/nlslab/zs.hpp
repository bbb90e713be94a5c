// Jost solutions of the Zakharov-Shabat system
//
//   i sigma3 v_x + Q v - lambda(z) v = 0,   Q = [[0, conj q],[q, 0]],
//
// and the scattering coefficients a(z), b(z), r(z) = b/a built from their
// Wronskians.  Columns are integrated in normalized form,
// psi_1 = m_1 e^{-i zeta x}, psi_2 = m_2 e^{+i zeta x}, which removes the
// free oscillation:
//
//   m_1' = i [[-1/z, conj q],[-q,   z ]] m_1
//   m_2' = i [[ -z,  conj q],[-q,  1/z]] m_2
//
// Minus columns start from the left end with the columns of B_- = I - sigma1/z,
// plus columns from the right end with those of B_+ = I + sigma1/z, and both
// meet at the center node x_match where the Wronskians are formed
// (they are x-independent, so any meeting point works).
#pragma once

#include "nlslab/core.hpp"

#include <array>

namespace nlslab {

using Vec2 = std::array<cplx, 2>;

inline cplx det2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

enum class Side { plus, minus };
enum class Exec { serial, parallel };

// Normalized Jost columns of one side evaluated at x_match.
struct JostPair {
    cplx z;
    double x_match = 0.0;
    Vec2 m1{}, m2{};
};

// All four columns at x_match (real z away from -1, 0, 1).
struct JostColumns {
    cplx z;
    double x_match = 0.0;
    Vec2 m1_minus{}, m2_plus{}, m1_plus{}, m2_minus{};
};

struct JostOptions {
    double theta_step = 0.05;   // target phase advance per RK4 substep
    bool want_norm = false;     // accumulate int |psi|^2 dx on the sweep's half-line
    bool want_profile = false;  // record m at every grid node of the sweep
};

struct JostSweep {
    Vec2 m1{}, m2{};            // values at x_match
    double norm1 = 0.0;         // int |psi_1|^2 dx over the swept half-line
    double norm2 = 0.0;
    std::vector<Vec2> m1_profile, m2_profile; // per grid node, sweep order
    std::vector<double> x_profile;
};

// Integrate both columns of one side from its end of the grid to x_match.
JostSweep jost_sweep(const GridFunction& q, cplx z, Side side, const JostOptions& opts = {});

// Columns of one side at x_match (thin wrapper over jost_sweep).
JostPair jost_solve(const GridFunction& q, cplx z, Side side);

// All four columns at x_match; intended for real z.
JostColumns jost_all(const GridFunction& q, cplx z);

// det [psi_1^-(z), psi_2^+(z)]; analytic in the upper half-plane and the
// quantity whose zeros are the discrete spectrum.  Remains finite at +-1.
cplx wronskian(const GridFunction& q, cplx z);

// a(z) = det [psi_1^-, psi_2^+] / (1 - 1/z^2), extended off the real axis.
cplx a_extend(const GridFunction& q, cplx z);

// Reflection data sampled on a SpectralGrid.
struct ScatteringCoefficients {
    SpectralGrid grid;
    std::vector<cplx> a, b, r;
};

// Per-node a, b, r over the grid.  Nodes are independent; exec selects the
// OpenMP kernel or the serial reference loop (identical results).
ScatteringCoefficients scattering_coefficients(const GridFunction& q, const SpectralGrid& grid,
                                               Exec exec = Exec::parallel);

} // namespace nlslab
