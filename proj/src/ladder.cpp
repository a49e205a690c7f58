#include "pdmcs/ladder.hpp"

#include <cmath>

#include "pdmcs/numerics.hpp"

namespace pdmcs {

double LadderSystem::phi(double x) const {
    const double f = profile.f(x);
    if (reference == ReferenceKind::Harmonic) return f;
    return f + 4.0 * f / (1.0 + 2.0 * f * f);
}

double LadderSystem::phi_prime(double x) const {
    const double fp = profile.sqrt_m(x);
    if (reference == ReferenceKind::Harmonic) return fp;
    const double f = profile.f(x);
    const double s = 1.0 + 2.0 * f * f;
    return fp * (1.0 + 4.0 * (1.0 - 2.0 * f * f) / (s * s));
}

double LadderSystem::k(double x) const {
    return profile.sqrt_m(x) * phi(x) - profile.m_prime(x) / (4.0 * profile.m(x));
}

LadderSystem build_ladder(const PdmProblem& problem) {
    if (!problem.reference.has_closed_form(0))
        throw std::invalid_argument("build_ladder: reference lacks a closed-form ground state");
    return LadderSystem{problem.profile, problem.reference.kind,
                        problem.reference.ground_energy()};
}

GridFunction k_from_ground(const GridFunction& u) {
    const int n = u.size();
    for (int i = 1; i < n - 1; ++i)
        if (std::abs(u[i]) < 1e-300)
            throw std::domain_error("k_from_ground: |u| vanishes at an interior node");
    GridFunction up = derivative(u, 1);
    GridFunction out(u.grid);
    for (int i = 0; i < n; ++i) out[i] = -up[i] / u[i];
    return out;
}

namespace {

// (1/sqrt2) [ sign * g'/sqrt(m) + (phi - sign * m'/(4 m^{3/2})) g ]
GridFunction apply_ladder_op(const LadderSystem& ls, const GridFunction& g, double sign) {
    GridFunction gp = derivative(g, 1);
    GridFunction out(g.grid);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < g.size(); ++i) {
        const double x = g.grid.node(i);
        const double m = ls.profile.m(x);
        const double q = ls.profile.m_prime(x) / (4.0 * m * std::sqrt(m));
        out[i] = inv_sqrt2 *
                 (sign * gp[i] / std::sqrt(m) + (ls.phi(x) - sign * q) * g[i]);
    }
    return out;
}

}  // namespace

GridFunction apply_annihilation(const LadderSystem& ls, const GridFunction& g) {
    return apply_ladder_op(ls, g, +1.0);
}

GridFunction apply_creation(const LadderSystem& ls, const GridFunction& g) {
    return apply_ladder_op(ls, g, -1.0);
}

GridFunction apply_momentum(const LadderSystem& ls, const GridFunction& g) {
    GridFunction gp = derivative(g, 1);
    GridFunction out(g.grid);
    const Complex minus_i(0.0, -1.0);
    for (int i = 0; i < g.size(); ++i) {
        const double x = g.grid.node(i);
        const double m = ls.profile.m(x);
        const double q = ls.profile.m_prime(x) / (4.0 * m * std::sqrt(m));
        out[i] = minus_i * (gp[i] / std::sqrt(m) - q * g[i]);
    }
    return out;
}

GridFunction apply_hamiltonian(const PdmProblem& problem, const GridFunction& g) {
    GridFunction gp = derivative(g, 1);
    GridFunction gpp = derivative(g, 2);
    GridFunction out(g.grid);
    for (int i = 0; i < g.size(); ++i) {
        const double x = g.grid.node(i);
        const double m = problem.profile.m(x);
        const double mp = problem.profile.m_prime(x);
        out[i] = -0.5 * (gpp[i] / m - (mp / (m * m)) * gp[i]) +
                 problem.effective_potential_at(x) * g[i];
    }
    return out;
}

double factorization_residual(const LadderSystem& ls, const PdmProblem& problem,
                              const GridFunction& g) {
    GridFunction lhs = apply_creation(ls, apply_annihilation(ls, g));
    GridFunction rhs = apply_hamiltonian(problem, g) - Complex(ls.lambda) * g;
    return l2_norm(lhs - rhs);
}

double commutator_residual(const LadderSystem& ls, const GridFunction& g) {
    GridFunction comm = apply_annihilation(ls, apply_creation(ls, g)) -
                        apply_creation(ls, apply_annihilation(ls, g));
    GridFunction scaled(g.grid);
    for (int i = 0; i < g.size(); ++i) {
        const double x = g.grid.node(i);
        scaled[i] = (ls.phi_prime(x) / ls.profile.sqrt_m(x)) * g[i];
    }
    return l2_norm(comm - scaled);
}

SecondSolution second_solution(const GridFunction& u, const MassProfile& profile) {
    const int n = u.size();
    for (int i = 0; i < n; ++i)
        if (std::abs(u[i]) < 1e-150)
            throw std::domain_error(
                "second_solution: |u| too small on the grid; shrink the domain");
    GridFunction integrand(u.grid);
    for (int i = 0; i < n; ++i)
        integrand[i] = profile.m(u.grid.node(i)) / std::norm(u[i]);
    GridFunction growth = cumulative_integral(integrand, 0.0);

    SecondSolution out{GridFunction(u.grid), GridFunction(u.grid)};
    for (int i = 0; i < n; ++i) {
        out.u_tilde[i] = u[i] * growth[i];
        out.eta[i] = profile.sqrt_m(u.grid.node(i)) / u[i];
    }
    return out;
}

}  // namespace pdmcs
