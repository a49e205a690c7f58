#include <doctest.h>

#include <cmath>

#include "pdmcs/ladder.hpp"
#include "pdmcs/numerics.hpp"
#include "pdmcs/spectral.hpp"

using namespace pdmcs;

TEST_SUITE("spectral") {

TEST_CASE("discretization structure") {
    PdmProblem p = make_problem(MassProfile::constant(), ReferenceKind::Harmonic);
    Grid g(-8.0, 8.0, 401);
    DiscreteHamiltonian h = discretize(p, g);
    CHECK(static_cast<int>(h.diag.size()) == g.n_points - 2);
    CHECK(static_cast<int>(h.offdiag.size()) == g.n_points - 3);

    // constant mass: textbook 1/h^2 + V on the diagonal, -1/(2h^2) off it
    const double hh = g.spacing();
    CHECK(h.offdiag[7] == doctest::Approx(-0.5 / (hh * hh)).epsilon(1e-14));
    const double x1 = g.node(1);
    CHECK(h.diag[0] == doctest::Approx(1.0 / (hh * hh) + 0.5 * x1 * x1).epsilon(1e-13));
}

TEST_CASE("particle in a box: exact discrete eigenvalues") {
    // free particle with Dirichlet walls; the 3-point scheme has the exact
    // spectrum (2/h^2) sin^2(k pi h / (2L)) to bisection accuracy
    PdmProblem p = make_problem(MassProfile::constant(), ReferenceKind::Harmonic);
    Grid g(0.0, 1.0, 201);
    DiscreteHamiltonian h = discretize(p, g);
    for (auto& d : h.diag) d = 1.0 / (g.spacing() * g.spacing());  // strip V
    std::vector<double> ev = lowest_eigenvalues(h, 4);
    const double pi = 4.0 * std::atan(1.0);
    for (int k = 1; k <= 4; ++k) {
        const double s = std::sin(0.5 * k * pi * g.spacing());
        const double exact = 2.0 * s * s / (g.spacing() * g.spacing());
        CHECK(ev[k - 1] == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("harmonic spectrum from the matrix") {
    PdmProblem p = make_problem(MassProfile::constant(), ReferenceKind::Harmonic);
    Grid g(-10.0, 10.0, 2001);
    std::vector<double> ev = lowest_eigenvalues(discretize(p, g), 6);
    for (int n = 0; n < 6; ++n) CHECK(std::abs(ev[n] - (n + 0.5)) < 1e-3);
    for (int n = 0; n + 1 < 6; ++n) CHECK(ev[n] < ev[n + 1]);
}

TEST_CASE("PDM spectra agree with the transferred energies") {
    Grid g(-10.0, 10.0, 2001);
    for (MassProfile profile : {MassProfile::rational_case1(0.5),
                                MassProfile::rational_case1(2.0),
                                MassProfile::cosh_case2(0.25)}) {
        PdmProblem p = make_problem(profile, ReferenceKind::Harmonic);
        std::vector<SpectrumRow> rows = spectrum_report(p, g, 5);
        REQUIRE(rows.size() == 5);
        for (const SpectrumRow& r : rows) {
            CHECK(r.analytic == doctest::Approx(r.n + 0.5));
            CHECK(r.gap < 1e-3);
        }
    }
}

TEST_CASE("nonlinear reference: ground state and skipped levels") {
    PdmProblem p = make_problem(MassProfile::constant(), ReferenceKind::CarinenaNonlinear);
    Grid g(-10.0, 10.0, 2001);
    std::vector<SpectrumRow> rows = spectrum_report(p, g, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 0);
    CHECK(rows[1].n == 3);
    CHECK(rows[2].n == 4);
    CHECK(rows[0].analytic == doctest::Approx(-1.5));
    CHECK(rows[1].analytic == doctest::Approx(1.5));
    CHECK(rows[2].analytic == doctest::Approx(2.5));
    for (const SpectrumRow& r : rows) CHECK(r.gap < 1e-3);
}

TEST_CASE("bisection agrees with the Rayleigh quotient of the eigenfunction") {
    PdmProblem p = make_problem(MassProfile::cosh_case2(0.75), ReferenceKind::Harmonic);
    Grid g = p.suggested_grid();
    GridFunction psi1 = p.eigenfunction(1, g);
    const double rq =
        inner_product(psi1, apply_hamiltonian(p, psi1)).real() /
        inner_product(psi1, psi1).real();
    std::vector<double> ev = lowest_eigenvalues(discretize(p, g), 2);
    CHECK(std::abs(rq - ev[1]) < 1e-3);
}

TEST_CASE("serial and parallel eigenvalue paths agree bitwise") {
    PdmProblem p = make_problem(MassProfile::rational_case1(2.0), ReferenceKind::Harmonic);
    Grid g(-10.0, 10.0, 1201);
    DiscreteHamiltonian h = discretize(p, g);
    std::vector<double> par = lowest_eigenvalues(h, 6);
    std::vector<double> ser = ref::lowest_eigenvalues(h, 6);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("invalid eigenvalue counts are rejected") {
    PdmProblem p = make_problem(MassProfile::constant(), ReferenceKind::Harmonic);
    Grid g(-5.0, 5.0, 101);
    DiscreteHamiltonian h = discretize(p, g);
    CHECK_THROWS_AS(lowest_eigenvalues(h, 0), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(h, g.n_points), std::invalid_argument);
}

}  // TEST_SUITE
