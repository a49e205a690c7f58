#include "pdmcs/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace pdmcs {

DiscreteHamiltonian discretize(const PdmProblem& problem, const Grid& grid) {
    const int n_int = grid.n_points - 2;
    const double h = grid.spacing();
    const double inv_2h2 = 1.0 / (2.0 * h * h);

    DiscreteHamiltonian out{grid, {}, {}};
    out.diag.resize(n_int);
    out.offdiag.resize(n_int - 1);

    auto w_mid = [&](int i) {  // 1/m halfway between nodes i and i+1
        return 1.0 / problem.profile.m(grid.node(i) + 0.5 * h);
    };

    for (int j = 0; j < n_int; ++j) {
        const int i = j + 1;
        out.diag[j] = (w_mid(i - 1) + w_mid(i)) * inv_2h2 +
                      problem.effective_potential_at(grid.node(i));
        if (j < n_int - 1) out.offdiag[j] = -w_mid(i) * inv_2h2;
    }
    return out;
}

namespace {

// Number of eigenvalues strictly below sigma (Sturm count via the
// LDL^T pivot recurrence).
int count_below(const DiscreteHamiltonian& h, double sigma) {
    const int n = static_cast<int>(h.diag.size());
    int count = 0;
    double d = 1.0;
    for (int i = 0; i < n; ++i) {
        d = (h.diag[i] - sigma) -
            (i > 0 ? h.offdiag[i - 1] * h.offdiag[i - 1] / d : 0.0);
        // Nudge exact-zero pivots negative *before* tallying the sign, so a
        // singular leading minor is attributed to the lower half-line.
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

double bisect_kth(const DiscreteHamiltonian& h, int k, double lo, double hi) {
    // Invariant: count_below(lo) <= k < count_below(hi).
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(h, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

void gershgorin_bounds(const DiscreteHamiltonian& h, double& lo, double& hi) {
    const int n = static_cast<int>(h.diag.size());
    lo = h.diag[0];
    hi = h.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(h.offdiag[i - 1]);
        if (i < n - 1) r += std::abs(h.offdiag[i]);
        lo = std::min(lo, h.diag[i] - r);
        hi = std::max(hi, h.diag[i] + r);
    }
}

void check_k(const DiscreteHamiltonian& h, int k) {
    if (k < 1 || k > static_cast<int>(h.diag.size()))
        throw std::invalid_argument("lowest_eigenvalues: k out of range");
}

}  // namespace

std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int k) {
    check_k(h, k);
    double lo, hi;
    gershgorin_bounds(h, lo, hi);
    std::vector<double> ev(k);
#pragma omp parallel for schedule(dynamic) if (k > 1)
    for (int j = 0; j < k; ++j) ev[j] = bisect_kth(h, j, lo, hi);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> ref::lowest_eigenvalues(const DiscreteHamiltonian& h, int k) {
    check_k(h, k);
    double lo, hi;
    gershgorin_bounds(h, lo, hi);
    std::vector<double> ev(k);
    for (int j = 0; j < k; ++j) ev[j] = bisect_kth(h, j, lo, hi);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<SpectrumRow> spectrum_report(const PdmProblem& problem, const Grid& grid,
                                         int k) {
    DiscreteHamiltonian h = discretize(problem, grid);
    std::vector<double> ev = lowest_eigenvalues(h, k);

    std::vector<SpectrumRow> rows;
    rows.reserve(k);
    int n = 0;
    for (int j = 0; j < k; ++j, ++n) {
        if (problem.reference.kind == ReferenceKind::CarinenaNonlinear && n == 1)
            n = 3;  // the nonlinear spectrum has no n = 1, 2 levels
        const double analytic = problem.energy(n);
        rows.push_back({n, analytic, ev[j], std::abs(analytic - ev[j])});
    }
    return rows;
}

}  // namespace pdmcs
