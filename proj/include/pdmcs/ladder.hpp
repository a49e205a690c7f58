#pragma once

#include "pdmcs/pct.hpp"

namespace pdmcs {

/// Ladder machinery for a PDM problem: the deformed superpotential phi,
/// the Riccati function K, and the factorization energy lambda so that
/// H - lambda = A^dag A.
struct LadderSystem {
    MassProfile profile;
    ReferenceKind reference;
    double lambda;

    /// phi = f (harmonic) or f + 4f/(1+2f^2) (nonlinear).
    double phi(double x) const;
    double phi_prime(double x) const;
    /// K = sqrt(m) * phi - m'/(4m), i.e. phi = K/sqrt(m) + m'/(4 m^{3/2}).
    double k(double x) const;
};

LadderSystem build_ladder(const PdmProblem& problem);

/// K = -u'/u from a nodeless ground state sample.
GridFunction k_from_ground(const GridFunction& u);

/// A g = (1/sqrt2) [ m^{-1/4} d/dx (m^{-1/4} g) + phi g ], product rule expanded.
GridFunction apply_annihilation(const LadderSystem& ls, const GridFunction& g);

/// A^dag g: the derivative term enters with opposite sign.
GridFunction apply_creation(const LadderSystem& ls, const GridFunction& g);

/// Deformed momentum Pi g = -i m^{-1/4} d/dx (m^{-1/4} g).
GridFunction apply_momentum(const LadderSystem& ls, const GridFunction& g);

/// PDM Hamiltonian: -(1/2) d/dx[(1/m) dg/dx] + V_eff g, product rule expanded.
GridFunction apply_hamiltonian(const PdmProblem& problem, const GridFunction& g);

/// || A^dag A g - (H - lambda) g ||_2
double factorization_residual(const LadderSystem& ls, const PdmProblem& problem,
                              const GridFunction& g);

/// || [A, A^dag] g - (phi'/sqrt(m)) g ||_2
double commutator_residual(const LadderSystem& ls, const GridFunction& g);

struct SecondSolution {
    GridFunction u_tilde;  // u * int_0^x m/|u|^2, the independent partner
    GridFunction eta;      // sqrt(m)/u, which A maps u_tilde onto (up to a constant)
};

SecondSolution second_solution(const GridFunction& u, const MassProfile& profile);

}  // namespace pdmcs
