#include "nlslab/core.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

cplx interp_value(const GridFunction& f, double x) {
    const auto& g = f.grid;
    const double h = g.h();
    const int n = g.n;
    double s = (x - g.x_min) / h;
    if (s <= 0.0) return f.values.front();
    if (s >= n - 1) return f.values.back();
    int j = (int)std::floor(s);
    int lo = std::clamp(j - 2, 0, n - 6);
    cplx acc{};
    for (int a = 0; a < 6; ++a) {
        double w = 1.0;
        for (int b = 0; b < 6; ++b) {
            if (b == a) continue;
            w *= (s - (lo + b)) / double(a - b);
        }
        acc += w * f.values[lo + a];
    }
    return acc;
}

SpectralGrid SpectralGrid::make(double delta0, double delta1, int per_side, bool include_negative) {
    if (!(delta0 > 0.0 && delta0 < 1.0)) throw std::invalid_argument("SpectralGrid: bad delta0");
    if (!(delta1 > 0.0 && delta1 < 0.5)) throw std::invalid_argument("SpectralGrid: bad delta1");
    const double U = std::log(1.0 / delta0);
    const double du = U / per_side;
    const double u_cut = std::log(1.0 + delta1); // |e^u - 1| < delta1  <=>  |u| < ~u_cut

    std::vector<double> mags; // |z| values > 1, paired with reciprocals
    for (int j = 0; j < per_side; ++j) {
        double u = (j + 0.5) * du;
        if (u <= u_cut + 0.5 * du * 1e-12) continue;
        if (std::abs(std::exp(u) - 1.0) < delta1 || std::abs(std::exp(-u) - 1.0) < delta1) continue;
        mags.push_back(std::exp(u));
    }

    SpectralGrid grid;
    grid.delta0 = delta0;
    grid.delta1 = delta1;

    struct Node { double z; double recip; };
    std::vector<double> nodes;
    for (double m : mags) {
        nodes.push_back(m);
        nodes.push_back(1.0 / m);
        if (include_negative) {
            nodes.push_back(-m);
            nodes.push_back(-1.0 / m);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    grid.z = nodes;

    grid.partner_.assign(nodes.size(), -1);
    for (int i = 0; i < (int)nodes.size(); ++i) {
        if (grid.partner_[i] >= 0) continue;
        double target = 1.0 / nodes[i];
        auto it = std::lower_bound(nodes.begin(), nodes.end(), target - 1e-12 * std::abs(target));
        int j = int(it - nodes.begin());
        // nearest of j, j+1
        if (j + 1 < (int)nodes.size() &&
            std::abs(nodes[j + 1] - target) < std::abs(nodes[j] - target))
            ++j;
        grid.partner_[i] = j;
        grid.partner_[j] = i;
    }
    return grid;
}

} // namespace nlslab
