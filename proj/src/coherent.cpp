#include "pdmcs/coherent.hpp"

#include <cmath>

#include "pdmcs/numerics.hpp"

namespace pdmcs {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

CoherentState make_coherent(const PdmProblem& problem, const LadderSystem&,
                            Complex alpha, const Grid& grid) {
    // The Gaussian envelope is centered at f = sqrt2 Re(alpha); it must sit
    // well inside the image f([x_min, x_max]).
    const double f_reach =
        std::min(problem.profile.f(grid.x_max), -problem.profile.f(grid.x_min));
    if (kSqrt2 * std::abs(alpha.real()) >= f_reach - 4.0)
        throw std::domain_error(
            "make_coherent: grid too small for this alpha (envelope escape)");

    GridFunction psi0 = problem.eigenfunction(0, grid);
    GridFunction state(grid);
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = problem.profile.f(grid.node(i));
        state[i] = psi0[i] * std::exp(kSqrt2 * alpha * f);
    }
    const double norm = l2_norm(state);
    for (auto& v : state.values) v /= norm;
    return CoherentState{alpha, std::move(state), 1.0 / norm};
}

double eigenstate_residual(const CoherentState& cs, const LadderSystem& ls) {
    GridFunction r = apply_annihilation(ls, cs.state) - cs.alpha * cs.state;
    return l2_norm(r) / std::max(std::abs(cs.alpha), 1.0);
}

UncertaintyReport uncertainty_report(const CoherentState& cs, const LadderSystem& ls) {
    const GridFunction& s = cs.state;
    const Grid& grid = s.grid;

    GridFunction phi_s(grid);
    GridFunction comm_s(grid);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.node(i);
        phi_s[i] = ls.phi(x) * s[i];
        comm_s[i] = (ls.phi_prime(x) / ls.profile.sqrt_m(x)) * s[i];
    }
    GridFunction pi_s = apply_momentum(ls, s);

    UncertaintyReport r{};
    r.mean_phi = inner_product(s, phi_s).real();
    r.mean_pi = inner_product(s, pi_s).real();
    const double phi2 = inner_product(phi_s, phi_s).real();
    const double pi2 = inner_product(pi_s, pi_s).real();
    r.var_phi = phi2 - r.mean_phi * r.mean_phi;
    r.var_pi = pi2 - r.mean_pi * r.mean_pi;
    r.product = r.var_phi * r.var_pi;
    r.commutator_mean = inner_product(s, comm_s).real();
    r.bound = 0.25 * r.commutator_mean * r.commutator_mean;
    r.equality_gap = std::abs(r.product - r.bound);
    return r;
}

GridFunction perelomov_series(const PdmProblem& problem, Complex alpha, int n_max,
                              const Grid& grid) {
    if (problem.reference.kind != ReferenceKind::Harmonic)
        throw std::invalid_argument(
            "perelomov_series: needs the full closed-form eigenbasis (harmonic only)");
    if (n_max < 0 || n_max > 60)
        throw std::invalid_argument("perelomov_series: n_max must be in [0, 60]");

    GridFunction acc(grid);
    const double abs_a = std::abs(alpha);
    const Complex phase = abs_a > 0.0 ? alpha / abs_a : Complex(1.0);
    Complex phase_n(1.0);
    for (int n = 0; n <= n_max; ++n) {
        // |c_n| in log space so n! never overflows.
        const double log_mag = -0.5 * abs_a * abs_a +
                               (n > 0 ? n * std::log(abs_a) : 0.0) -
                               0.5 * std::lgamma(n + 1.0);
        const Complex c = std::exp(log_mag) * phase_n;
        GridFunction psi_n = problem.eigenfunction(n, grid);
        for (int i = 0; i < grid.n_points; ++i) acc[i] += c * psi_n[i];
        phase_n *= phase;
        if (abs_a == 0.0) break;  // only the n = 0 term survives
    }
    return acc;
}

DisplacementCheck displacement_check(const PdmProblem& problem, const LadderSystem& ls,
                                     Complex alpha, const Grid& grid) {
    DisplacementCheck out{};
    out.pure_imaginary = alpha.real() == 0.0;

    GridFunction psi0 = problem.eigenfunction(0, grid);
    GridFunction prod(grid);
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = problem.profile.f(grid.node(i));
        prod[i] = psi0[i] * std::exp(kSqrt2 * alpha * f);
    }
    const double norm = l2_norm(prod);
    out.norm_deviation = std::abs(norm - 1.0);

    GridFunction renorm = prod;
    for (auto& v : renorm.values) v /= norm;
    CoherentState as_state{alpha, renorm, 1.0 / norm};
    out.eigen_residual = eigenstate_residual(as_state, ls);

    CoherentState direct = make_coherent(problem, ls, alpha, grid);
    out.pointwise_gap = sup_distance(renorm, direct.state);
    return out;
}

}  // namespace pdmcs
