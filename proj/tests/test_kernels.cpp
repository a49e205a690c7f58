#include <doctest.h>

#include <cmath>

#include "pdmcs/numerics.hpp"
#include "pdmcs/spectral.hpp"

using namespace pdmcs;

TEST_SUITE("kernels") {

TEST_CASE("parallel derivative matches the serial reference bitwise") {
    // large enough to cross the parallel-dispatch threshold
    Grid g(-20.0, 20.0, (1 << 15) + 1);
    GridFunction f = sample(g, [](double x) {
        return Complex(std::exp(-0.01 * x * x) * std::cos(3.0 * x),
                       std::exp(-0.02 * x * x) * std::sin(2.0 * x));
    });
    for (int order : {1, 2}) {
        GridFunction par = derivative(f, order);
        GridFunction ser = ref::derivative(f, order);
        for (int i = 0; i < g.n_points; ++i) {
            CHECK(par[i].real() == ser[i].real());
            CHECK(par[i].imag() == ser[i].imag());
        }
    }
}

TEST_CASE("small inputs stay on the serial path and still agree") {
    Grid g(-2.0, 2.0, 257);
    GridFunction f = sample(g, [](double x) { return std::exp(-x * x); });
    GridFunction par = derivative(f, 1);
    GridFunction ser = ref::derivative(f, 1);
    CHECK(sup_distance(par, ser) == 0.0);
}

TEST_CASE("parallel eigenvalue sweep matches the serial reference bitwise") {
    PdmProblem p = make_problem(MassProfile::cosh_case2(0.5), ReferenceKind::Harmonic);
    Grid g(-10.0, 10.0, 4001);
    DiscreteHamiltonian h = discretize(p, g);
    std::vector<double> par = lowest_eigenvalues(h, 8);
    std::vector<double> ser = ref::lowest_eigenvalues(h, 8);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("repeated parallel runs are deterministic") {
    Grid g(-20.0, 20.0, (1 << 15) + 1);
    GridFunction f = sample(g, [](double x) { return std::sin(x) * std::exp(-0.01 * x * x); });
    GridFunction a = derivative(f, 2);
    GridFunction b = derivative(f, 2);
    CHECK(sup_distance(a, b) == 0.0);
}

}  // TEST_SUITE
