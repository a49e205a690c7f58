#pragma once

#include <vector>

#include "pdmcs/pct.hpp"

namespace pdmcs {

/// Symmetric tridiagonal discretization of the PDM Hamiltonian on the
/// interior nodes (Dirichlet ends), from the conservative scheme
/// (H psi)_i = -(1/2h^2)[w_{i+1/2}(psi_{i+1}-psi_i) - w_{i-1/2}(psi_i-psi_{i-1})] + V_i psi_i
/// with w = 1/m at midpoints. Symmetry is exact by construction.
struct DiscreteHamiltonian {
    Grid grid;
    std::vector<double> diag;     // length n_points - 2
    std::vector<double> offdiag;  // length n_points - 3
};

DiscreteHamiltonian discretize(const PdmProblem& problem, const Grid& grid);

/// k smallest eigenvalues, ascending, via Sturm-sequence bisection,
/// each bracketed to absolute width 1e-10.
std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int k);

namespace ref {
/// Serial loop over eigenvalue indices; same bisection per index.
std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int k);
}  // namespace ref

struct SpectrumRow {
    int n;            // quantum number (nonlinear skips n = 1, 2)
    double analytic;  // PCT-transferred energy
    double discrete;  // finite-difference eigenvalue
    double gap;       // |analytic - discrete|
};

std::vector<SpectrumRow> spectrum_report(const PdmProblem& problem, const Grid& grid,
                                         int k);

}  // namespace pdmcs
