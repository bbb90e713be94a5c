// Timing comparison of the OpenMP kernels against their serial reference
// loops: per-node scattering, the circle scan, and N-soliton profile
// evaluation.  Results are checked for equality while timing.
#include "nlslab/nsoliton.hpp"
#include "nlslab/potentials.hpp"
#include "nlslab/spectrum.hpp"

#include <chrono>
#include <cstdio>

using namespace nlslab;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& fn) {
    auto t0 = clock_type::now();
    fn();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main() {
    SpatialGrid grid(-40.0, 40.0, 2048);
    auto q = tanh_gaussian(grid, 0.1);
    auto zgrid = SpectralGrid::make(0.05, 0.02, 128);

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        ScatteringCoefficients ss, sp;
        double ts = time_of([&] { ss = scattering_coefficients(q, zgrid, Exec::serial); });
        double tp = time_of([&] { sp = scattering_coefficients(q, zgrid, Exec::parallel); });
        bool same = true;
        for (int i = 0; i < zgrid.size(); ++i) same &= (ss.a[i] == sp.a[i] && ss.b[i] == sp.b[i]);
        std::printf("%-28s %9.3fs %9.3fs %7.2fx %s\n", "scattering_coefficients", ts, tp, ts / tp,
                    same ? "" : "MISMATCH");
    }

    {
        auto spec = SolitonSpec::make({M_PI / 5, 2 * M_PI / 5, 3 * M_PI / 5, 4 * M_PI / 5},
                                      {0.7, 1.3, 2.0, 0.4});
        std::vector<double> xs(1 << 16);
        for (size_t i = 0; i < xs.size(); ++i) xs[i] = -40.0 + 80.0 * i / xs.size();
        std::vector<cplx> vs, vp;
        double ts = time_of([&] { vs = nsoliton_profile(spec, xs, 7.0, Exec::serial); });
        double tp = time_of([&] { vp = nsoliton_profile(spec, xs, 7.0, Exec::parallel); });
        bool same = vs == vp;
        std::printf("%-28s %9.3fs %9.3fs %7.2fx %s\n", "nsoliton_profile", ts, tp, ts / tp,
                    same ? "" : "MISMATCH");
    }

    {
        // the circle scan is openmp inside; time it against a hand loop
        double tp = time_of([&] { (void)find_circle_zeros(q, 512); });
        double ts = time_of([&] {
            for (int i = 0; i < 512; ++i) (void)wronskian(q, std::polar(1.0, M_PI * (i + 0.5) / 512));
        });
        std::printf("%-28s %9.3fs %9.3fs %7.2fx %s\n", "circle scan (512 nodes)", ts, tp, ts / tp, "");
    }
    return 0;
}
