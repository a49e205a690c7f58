#pragma once

#include "pdmcs/grid.hpp"
#include "pdmcs/mass_profile.hpp"

namespace pdmcs {

struct unsupported_quantum_number : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
/// n is capped at 60 to stay inside double range at desk scale.
double hermite_eval(int n, double y);

enum class ReferenceKind { Harmonic, CarinenaNonlinear };

/// Constant-mass reference problem: potential, spectrum, and the
/// closed-form eigenfunctions that transfer onto the PDM problem.
struct ReferenceOscillator {
    ReferenceKind kind;

    double potential(double y) const;
    /// Harmonic: n + 1/2 for n >= 0. Nonlinear: n - 3/2 for n in {0,3,4,...};
    /// n = 1, 2 do not exist in the spectrum.
    double energy(int n) const;
    bool has_closed_form(int n) const;
    /// Normalized psi_n(y). Harmonic: all n up to the Hermite cap;
    /// nonlinear: ground state only.
    double psi(int n, double y) const;
    double ground_energy() const;
};

/// A mass profile paired with a reference oscillator; carries the
/// effective potential of the transformed problem.
struct PdmProblem {
    MassProfile profile;
    ReferenceOscillator reference;

    /// V(f(x)) + (1/8m)[m''/m - (7/4)(m'/m)^2]
    double effective_potential_at(double x) const;
    GridFunction effective_potential(const Grid& grid) const;

    /// Normalized PDM eigenfunction m^{1/4} psi_n(f(x)), rescaled to unit
    /// quadrature norm. raw_norm, if given, receives the norm before the
    /// rescale (1 up to grid error when f spans the grid's image).
    GridFunction eigenfunction(int n, const Grid& grid, double* raw_norm = nullptr) const;

    /// PCT-transferred energy; independent of the mass profile.
    double energy(int n) const;

    /// Symmetric grid wide enough that eigenfunctions up to n_max fall
    /// below ~1e-13 of their peak at both ends. Odd point count.
    Grid suggested_grid(int n_points = 3001, int n_max = 0) const;
};

PdmProblem make_problem(const MassProfile& profile, ReferenceKind reference);

}  // namespace pdmcs
