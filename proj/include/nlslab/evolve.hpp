// Direct time evolution of the defocusing NLS equation with finite-density
// data.  The solver advances v(x,t) = q(x,t) - tanh(x), which decays at both
// ends of the box and is legitimately periodic for the Fourier linear flow.
// Substituting q = v + tanh into the equation gives
//
//   i v_t + v_xx - 2(|v|^2 + 2 Re(v) tanh x)(v + tanh x) + 2 sech^2(x) v = 0,
//
// split Strang-style: a half step of the pointwise nonlinear/potential ODE
// (one RK4 step per node, no spatial coupling), the exact spectral step for
// i v_t + v_xx = 0, and another half nonlinear step.
#pragma once

#include "nlslab/core.hpp"

#include <memory>
#include <string>

namespace nlslab {

struct EvolutionState {
    GridFunction v;  // q - tanh
    double t = 0.0;
    double dt = 2e-3;
};

struct MassTrace {
    std::vector<double> t;
    std::vector<double> mass; // int (1 - |q|^2) dx
};

class SplitStepSolver {
  public:
    explicit SplitStepSolver(const SpatialGrid& g);
    ~SplitStepSolver();
    SplitStepSolver(const SplitStepSolver&) = delete;
    SplitStepSolver& operator=(const SplitStepSolver&) = delete;

    EvolutionState init(const GridFunction& q0, double dt) const;

    // one Strang step; throws on NaN (defocusing data should never blow up)
    void step(EvolutionState& s) const;

    GridFunction q_of(const EvolutionState& s) const;
    double mass(const EvolutionState& s) const;
    // |v| at the outermost samples; the run is only trustworthy while this
    // stays small (solution contained in the box)
    double boundary_magnitude(const EvolutionState& s) const;

    const SpatialGrid& grid() const { return grid_; }

  private:
    void nonlinear_half_step(EvolutionState& s) const;
    void linear_full_step(EvolutionState& s) const;

    SpatialGrid grid_;
    std::vector<double> tanh_, sech2_, k_;
    struct Fft;
    std::unique_ptr<Fft> fft_;
};

// Drive q0 to t_final with uniform steps of ~dt (rounded to divide t_final).
GridFunction evolve_to(const GridFunction& q0, double t_final, double dt,
                       MassTrace* trace = nullptr);

// Evolve once and collect snapshots at each requested time (ascending).
std::vector<GridFunction> evolve_snapshots(const GridFunction& q0,
                                           const std::vector<double>& times, double dt,
                                           MassTrace* trace = nullptr);

// CSV rows: x, Re q, Im q, |q|^2
void write_snapshot_csv(const std::string& path, const GridFunction& q);

} // namespace nlslab
