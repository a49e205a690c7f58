#include "pdmcs/verify.hpp"

#include <chrono>
#include <cmath>

#include "pdmcs/numerics.hpp"

namespace pdmcs {

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct NamedProfile {
    std::string name;
    MassProfile profile;
};

std::vector<NamedProfile> five_profiles() {
    return {{"constant", MassProfile::constant()},
            {"case1 g=0.5", MassProfile::rational_case1(0.5)},
            {"case1 g=2", MassProfile::rational_case1(2.0)},
            {"case2 g=0.25", MassProfile::cosh_case2(0.25)},
            {"case2 g=1", MassProfile::cosh_case2(1.0)}};
}

std::vector<std::pair<std::string, ReferenceKind>> both_references() {
    return {{"harmonic", ReferenceKind::Harmonic},
            {"nonlinear", ReferenceKind::CarinenaNonlinear}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CriterionResult spectra_harmonic() {
    CriterionResult r{1, "harmonic PDM spectrum vs finite-difference oracle", {}, 0.0};
    const Grid grid(-10.0, 10.0, 2001);
    std::vector<NamedProfile> profiles = {
        {"constant", MassProfile::constant()},
        {"case1 g=2", MassProfile::rational_case1(2.0)},
        {"case2 g=0.75", MassProfile::cosh_case2(0.75)}};
    for (const auto& [name, profile] : profiles) {
        const auto t0 = std::chrono::steady_clock::now();
        PdmProblem problem = make_problem(profile, ReferenceKind::Harmonic);
        auto rows = spectrum_report(problem, grid, 5);
        double max_gap = 0.0;
        for (const auto& row : rows) max_gap = std::max(max_gap, row.gap);
        const double dt = seconds_since(t0);
        r.add(check("spectrum " + name + " max gap (5 levels)", max_gap, 1e-3));
        r.add(check("spectrum " + name + " wall time [s]", dt, 5.0));
    }
    return r;
}

CriterionResult spectra_nonlinear() {
    CriterionResult r{2, "nonlinear PDM spectrum (n = 1, 2 absent)", {}, 0.0};
    const Grid grid(-10.0, 10.0, 2001);
    std::vector<NamedProfile> profiles = {
        {"constant", MassProfile::constant()},
        {"case1 g=2", MassProfile::rational_case1(2.0)}};
    const std::vector<double> expected = {-1.5, 1.5, 2.5, 3.5};
    for (const auto& [name, profile] : profiles) {
        PdmProblem problem = make_problem(profile, ReferenceKind::CarinenaNonlinear);
        DiscreteHamiltonian h = discretize(problem, grid);
        auto ev = lowest_eigenvalues(h, 4);
        double max_gap = 0.0;
        for (int i = 0; i < 4; ++i)
            max_gap = std::max(max_gap, std::abs(ev[i] - expected[i]));
        r.add(check("nonlinear spectrum " + name + " max gap", max_gap, 1e-3));
    }
    return r;
}

CriterionResult ground_state_annihilation() {
    CriterionResult r{3, "ground-state annihilation ||A psi0||", {}, 0.0};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : five_profiles()) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid();
            LadderSystem ls = build_ladder(problem);
            GridFunction psi0 = problem.eigenfunction(0, grid);
            const double res = l2_norm(apply_annihilation(ls, psi0));
            r.add(check(rname + " " + pname, res, 1e-6));
        }
    }
    return r;
}

CriterionResult factorization() {
    CriterionResult r{4, "factorization ||AdagA g - (H - lambda) g||", {}, 0.0};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : five_profiles()) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid(3001, 2);
            LadderSystem ls = build_ladder(problem);

            std::vector<std::pair<std::string, GridFunction>> states;
            states.emplace_back("psi0", problem.eigenfunction(0, grid));
            if (rkind == ReferenceKind::Harmonic)
                states.emplace_back("psi2", problem.eigenfunction(2, grid));
            states.emplace_back("bump", smooth_bump(profile, grid));

            for (const auto& [gname, g] : states)
                r.add(check(rname + " " + pname + " " + gname,
                            factorization_residual(ls, problem, g), 1e-4));
        }
    }
    return r;
}

std::vector<Complex> test_alphas() {
    return {Complex(0.3, 0.0), Complex(0.0, 0.4), Complex(0.3, 0.2)};
}

std::string alpha_label(Complex a) {
    return "alpha=" + format_g12(a.real()) + "+" + format_g12(a.imag()) + "i";
}

CriterionResult coherent_eigenstate() {
    CriterionResult r{5, "coherent states are annihilation eigenstates", {}, 0.0};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : five_profiles()) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid();
            LadderSystem ls = build_ladder(problem);
            for (Complex a : test_alphas()) {
                CoherentState cs = make_coherent(problem, ls, a, grid);
                r.add(check(rname + " " + pname + " " + alpha_label(a),
                            eigenstate_residual(cs, ls), 1e-5));
            }
        }
    }
    return r;
}

CriterionResult uncertainty_equality() {
    CriterionResult r{6, "uncertainty product equals the commutator bound", {}, 0.0};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : five_profiles()) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid();
            LadderSystem ls = build_ladder(problem);
            for (Complex a : test_alphas()) {
                CoherentState cs = make_coherent(problem, ls, a, grid);
                UncertaintyReport u = uncertainty_report(cs, ls);
                const std::string tag = rname + " " + pname + " " + alpha_label(a);
                r.add(check(tag + " gap/bound", u.equality_gap / u.bound, 1e-6));
                if (rkind == ReferenceKind::Harmonic) {
                    r.add(check(tag + " |var_phi - 1/2|", std::abs(u.var_phi - 0.5), 1e-8));
                    r.add(check(tag + " |var_pi - 1/2|", std::abs(u.var_pi - 0.5), 1e-8));
                    r.add(check(tag + " |product - 1/4|", std::abs(u.product - 0.25), 1e-8));
                }
            }
        }
    }
    return r;
}

CriterionResult moment_identities() {
    CriterionResult r{7, "first moments <phi>, <Pi> vs sqrt2 Re/Im alpha", {}, 0.0};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : five_profiles()) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid();
            LadderSystem ls = build_ladder(problem);
            for (Complex a : test_alphas()) {
                CoherentState cs = make_coherent(problem, ls, a, grid);
                UncertaintyReport u = uncertainty_report(cs, ls);
                const std::string tag = rname + " " + pname + " " + alpha_label(a);
                r.add(check(tag + " mean_phi",
                            std::abs(u.mean_phi - kSqrt2 * a.real()), 1e-7));
                r.add(check(tag + " mean_pi",
                            std::abs(u.mean_pi - kSqrt2 * a.imag()), 1e-7));
            }
        }
    }
    return r;
}

CriterionResult perelomov_equivalence() {
    CriterionResult r{8, "Perelomov series matches the closed form", {}, 0.0};
    PdmProblem problem =
        make_problem(MassProfile::rational_case1(2.0), ReferenceKind::Harmonic);
    const Grid grid = problem.suggested_grid(3001, 40);
    LadderSystem ls = build_ladder(problem);
    const Complex alpha(0.8, 0.0);
    CoherentState closed = make_coherent(problem, ls, alpha, grid);

    std::vector<double> gaps;
    for (int n_max : {10, 20, 40}) {
        GridFunction series = perelomov_series(problem, alpha, n_max, grid);
        gaps.push_back(sup_distance(series, closed.state));
    }
    r.add(check("sup gap at n_max=40", gaps[2], 1e-6));
    const bool monotone = gaps[0] > gaps[1] && gaps[1] > gaps[2];
    r.add(CheckRecord{"gap decreases over n_max in {10,20,40}",
                      monotone ? 0.0 : 1.0, 0.5, monotone});
    return r;
}

CriterionResult constant_mass_reduction() {
    CriterionResult r{9, "constant-mass limits of both profiles", {}, 0.0};
    PdmProblem base = make_problem(MassProfile::constant(), ReferenceKind::Harmonic);
    const Grid grid = base.suggested_grid();
    const Complex alpha(0.5, 0.0);
    CoherentState ref_state =
        make_coherent(base, build_ladder(base), alpha, grid);

    std::vector<NamedProfile> limits = {
        {"case1 g=1", MassProfile::rational_case1(1.0)},
        {"case2 g=1e-8", MassProfile::cosh_case2(1e-8)}};
    for (const auto& [name, profile] : limits) {
        PdmProblem problem = make_problem(profile, ReferenceKind::Harmonic);
        CoherentState cs = make_coherent(problem, build_ladder(problem), alpha, grid);
        r.add(check(name + " sup gap vs constant",
                    sup_distance(cs.state, ref_state.state), 1e-8));
    }
    return r;
}

CriterionResult second_solution_identity() {
    CriterionResult r{10, "second solution: A u_tilde proportional to sqrt(m)/u", {}, 0.0};
    std::vector<NamedProfile> profiles = {
        {"constant", MassProfile::constant()},
        {"case2 g=0.5", MassProfile::cosh_case2(0.5)}};
    const Grid grid(-4.0, 4.0, 3201);
    for (const auto& [name, profile] : profiles) {
        PdmProblem problem = make_problem(profile, ReferenceKind::Harmonic);
        LadderSystem ls = build_ladder(problem);
        GridFunction u = problem.eigenfunction(0, grid);
        SecondSolution ss = second_solution(u, profile);
        GridFunction au = apply_annihilation(ls, ss.u_tilde);

        // Trusted interval: where u is resolvable. Outside it the growing
        // solution u_tilde ~ 1/u amplifies stencil error past the tolerance.
        // The overall constant is fitted (the anchor of the growth integral
        // only fixes it up to rescaling that A passes through linearly).
        const double floor = 1e-3 * sup_norm(u);
        Complex num{}, den{};
        for (int i = 0; i < grid.n_points; ++i) {
            if (std::abs(u[i]) <= floor) continue;
            num += std::conj(au[i]) * ss.eta[i];
            den += std::conj(au[i]) * au[i];
        }
        const Complex scale = num / den;
        double err2 = 0.0, ref2 = 0.0;
        for (int i = 0; i < grid.n_points; ++i) {
            if (std::abs(u[i]) <= floor) continue;
            err2 += std::norm(scale * au[i] - ss.eta[i]);
            ref2 += std::norm(ss.eta[i]);
        }
        r.add(check(name + " relative residual", std::sqrt(err2 / ref2), 1e-4));
    }
    return r;
}

CriterionResult commutator_identity() {
    CriterionResult r{11, "commutator [A, Adag] = phi'/sqrt(m) on localized states", {}, 0.0};
    std::vector<NamedProfile> profiles = {
        {"constant", MassProfile::constant()},
        {"case1 g=2", MassProfile::rational_case1(2.0)},
        {"case2 g=0.5", MassProfile::cosh_case2(0.5)}};
    for (const auto& [rname, rkind] : both_references()) {
        for (const auto& [pname, profile] : profiles) {
            PdmProblem problem = make_problem(profile, rkind);
            const Grid grid = problem.suggested_grid();
            LadderSystem ls = build_ladder(problem);
            GridFunction bump = smooth_bump(profile, grid);
            r.add(check(rname + " " + pname, commutator_residual(ls, bump), 1e-4));
        }
    }
    return r;
}

}  // namespace

GridFunction smooth_bump(const MassProfile& profile, const Grid& grid) {
    GridFunction b = sample(grid, [&](double x) { return profile.f(x); });
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = b[i].real();
        b[i] = Complex(0.3 + f - 0.4 * f * f, 0.2 * f) * std::exp(-0.5 * f * f);
    }
    const double norm = l2_norm(b);
    for (auto& v : b.values) v /= norm;
    return b;
}

std::vector<CriterionResult> run_acceptance_criteria() {
    std::vector<CriterionResult> out;
    const auto t_start = std::chrono::steady_clock::now();

    auto timed = [&](CriterionResult (*fn)()) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        r.seconds = seconds_since(t0);
        out.push_back(std::move(r));
    };

    timed(&spectra_harmonic);
    timed(&spectra_nonlinear);
    timed(&ground_state_annihilation);
    timed(&factorization);
    timed(&coherent_eigenstate);
    timed(&uncertainty_equality);
    timed(&moment_identities);
    timed(&perelomov_equivalence);
    timed(&constant_mass_reduction);
    timed(&second_solution_identity);
    timed(&commutator_identity);

    CriterionResult total{12, "full suite wall time", {}, 0.0};
    total.seconds = seconds_since(t_start);
    total.add(check("total wall time [s]", total.seconds, 120.0));
    out.push_back(std::move(total));
    return out;
}

Report acceptance_report() {
    Report rep;
    rep.command = "verify-all";
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& crit : run_acceptance_criteria()) {
        for (const auto& c : crit.checks)
            rep.add(CheckRecord{"[" + std::to_string(crit.id) + "] " + c.name, c.value,
                                c.tolerance, c.passed});
    }
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

}  // namespace pdmcs
