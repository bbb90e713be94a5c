#include "nlslab/potentials.hpp"

#include <cmath>

namespace nlslab {

GridFunction sample_potential(const SpatialGrid& g, const std::function<cplx(double)>& f) {
    GridFunction q(g);
    for (int j = 0; j < g.n; ++j) q.values[j] = f(g.x(j));
    return q;
}

GridFunction black_soliton(const SpatialGrid& g) {
    return sample_potential(g, [](double x) { return cplx{std::tanh(x), 0.0}; });
}

GridFunction dark_soliton(const SpatialGrid& g, double theta, double x0) {
    cplx z0 = std::polar(1.0, theta);
    double zr = z0.real(), zi = z0.imag();
    return sample_potential(g, [=](double x) {
        return -I * z0 * (I * zr + zi * std::tanh(zi * (x - x0)));
    });
}

GridFunction tanh_gaussian(const SpatialGrid& g, double amp, double sigma) {
    return sample_potential(g, [=](double x) {
        double u = x / sigma;
        return cplx{std::tanh(x) + amp * std::exp(-u * u), 0.0};
    });
}

cplx bump_value(double x, double center, double width) {
    double u = (x - center) / width;
    if (std::abs(u) >= 1.0) return {};
    double c = std::cos(0.5 * M_PI * u);
    return cplx{c * c, 0.0};
}

GridFunction tanh_compact_bump(const SpatialGrid& g, double amp_re, double amp_im,
                               double center, double width) {
    cplx amp{amp_re, amp_im};
    return sample_potential(g, [=](double x) {
        return std::tanh(x) + amp * bump_value(x, center, width);
    });
}

} // namespace nlslab
