// Timing comparison between the OpenMP kernels and their serial reference
// implementations. Grid sizes here are far beyond what the verification
// suite needs; the point is to show the parallel path scaling.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "pdmcs/numerics.hpp"
#include "pdmcs/spectral.hpp"

using namespace pdmcs;

namespace {

double time_of(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() /
           reps;
}

}  // namespace

int main() {
    {
        const Grid grid(-10.0, 10.0, (1 << 21) + 1);
        GridFunction f = sample(grid, [](double x) { return std::sin(3.0 * x) * std::exp(-0.05 * x * x); });

        GridFunction check_par = derivative(f, 1);
        GridFunction check_ser = ref::derivative(f, 1);
        const double gap = sup_distance(check_par, check_ser);

        const double t_par = time_of([&] { derivative(f, 1); }, 20);
        const double t_ser = time_of([&] { ref::derivative(f, 1); }, 20);
        std::printf("derivative  n=%d  serial %.4f ms  parallel %.4f ms  speedup %.2fx  max|diff| %.3g\n",
                    grid.n_points, 1e3 * t_ser, 1e3 * t_par, t_ser / t_par, gap);
    }

    {
        PdmProblem problem =
            make_problem(MassProfile::rational_case1(2.0), ReferenceKind::Harmonic);
        const Grid grid(-10.0, 10.0, 8001);
        DiscreteHamiltonian h = discretize(problem, grid);
        const int k = 8;

        auto ev_par = lowest_eigenvalues(h, k);
        auto ev_ser = ref::lowest_eigenvalues(h, k);
        double gap = 0.0;
        for (int i = 0; i < k; ++i) gap = std::max(gap, std::abs(ev_par[i] - ev_ser[i]));

        const double t_par = time_of([&] { lowest_eigenvalues(h, k); }, 5);
        const double t_ser = time_of([&] { ref::lowest_eigenvalues(h, k); }, 5);
        std::printf("eigenvalues n=%d k=%d  serial %.2f ms  parallel %.2f ms  speedup %.2fx  max|diff| %.3g\n",
                    grid.n_points, k, 1e3 * t_ser, 1e3 * t_par, t_ser / t_par, gap);
    }
    return 0;
}
