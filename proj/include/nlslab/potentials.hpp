// Builtin finite-density potentials used by the CLI and the test suites.
#pragma once

#include "nlslab/core.hpp"

#include <functional>

namespace nlslab {

GridFunction sample_potential(const SpatialGrid& g, const std::function<cplx(double)>& f);

// q(x) = tanh(x), the stationary black soliton.
GridFunction black_soliton(const SpatialGrid& g);

// One dark soliton with pole e^{i theta}, offset x0, at t = 0.
GridFunction dark_soliton(const SpatialGrid& g, double theta, double x0 = 0.0);

// tanh(x) + amp * exp(-(x/sigma)^2)
GridFunction tanh_gaussian(const SpatialGrid& g, double amp, double sigma = 1.0);

// Smooth bump supported on |x - center| < width: cos^2(pi u / 2) profile.
cplx bump_value(double x, double center, double width);

// tanh(x) + (amp_re + i amp_im) * bump(x)
GridFunction tanh_compact_bump(const SpatialGrid& g, double amp_re, double amp_im,
                               double center = 0.0, double width = 1.0);

} // namespace nlslab
