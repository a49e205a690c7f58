#pragma once

#include "pdmcs/ladder.hpp"

namespace pdmcs {

struct CoherentState {
    Complex alpha;
    GridFunction state;     // normalized on its grid
    double norm_constant;   // 1 / ||psi0 * exp(sqrt2 alpha f)||
};

/// |alpha> = psi0 * exp(sqrt2 alpha f), normalized by quadrature.
/// Throws std::domain_error when the shifted envelope would leak past
/// the grid ends.
CoherentState make_coherent(const PdmProblem& problem, const LadderSystem& ls,
                            Complex alpha, const Grid& grid);

/// || A|a> - a|a> ||_2 / max(|a|, 1)
double eigenstate_residual(const CoherentState& cs, const LadderSystem& ls);

struct UncertaintyReport {
    double mean_phi;
    double mean_pi;
    double var_phi;
    double var_pi;
    double product;          // var_phi * var_pi
    double commutator_mean;  // <phi'/sqrt(m)>
    double bound;            // commutator_mean^2 / 4
    double equality_gap;     // |product - bound|; zero analytically
};

/// All moments by quadrature; <Pi^2> in the adjoint-square form
/// <Pi s, Pi s> so the variance is manifestly real and nonnegative.
UncertaintyReport uncertainty_report(const CoherentState& cs, const LadderSystem& ls);

/// Truncated displacement-operator expansion
/// e^{-|a|^2/2} sum_n a^n/sqrt(n!) psi_n. Harmonic reference only.
GridFunction perelomov_series(const PdmProblem& problem, Complex alpha, int n_max,
                              const Grid& grid);

struct DisplacementCheck {
    bool pure_imaginary;
    double norm_deviation;  // | ||exp(sqrt2 a f) psi0|| - 1 |, no renormalization
    double eigen_residual;  // annihilation-eigenstate residual of the product state
    double pointwise_gap;   // sup | renormalized product - make_coherent |
};

DisplacementCheck displacement_check(const PdmProblem& problem, const LadderSystem& ls,
                                     Complex alpha, const Grid& grid);

}  // namespace pdmcs
