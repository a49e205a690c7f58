#include <doctest.h>

#include <cmath>
#include <random>

#include "pdmcs/numerics.hpp"

using namespace pdmcs;

namespace {
const double kPi = 4.0 * std::atan(1.0);

GridFunction random_localized(const Grid& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    return sample(g, [&](double x) {
        return Complex(c0 + c1 * x, c2 + c3 * x) * std::exp(-0.5 * x * x);
    });
}
}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(Grid(1.0, 0.0, 101), std::invalid_argument);
    CHECK_THROWS_AS(Grid(0.0, 1.0, 8), std::invalid_argument);
    Grid g(0.0, 1.0, 101);
    CHECK(g.spacing() == doctest::Approx(0.01));
    CHECK(g.node(100) == doctest::Approx(1.0));
}

TEST_CASE("derivative exact on quadratics") {
    Grid g(-1.0, 1.0, 101);
    GridFunction f = sample(g, [](double x) { return x * x; });
    GridFunction df = derivative(f, 1);
    double err = 0.0;
    for (int i = 0; i < g.n_points; ++i)
        err = std::max(err, std::abs(df[i] - Complex(2.0 * g.node(i))));
    CHECK(err < 1e-10);
}

TEST_CASE("derivative of a constant vanishes") {
    Grid g(-2.0, 3.0, 201);
    GridFunction f = sample(g, [](double) { return 4.2; });
    CHECK(sup_norm(derivative(f, 1)) < 1e-12);
}

TEST_CASE("second derivative of sin") {
    Grid g(-4.0, 4.0, 801);
    GridFunction f = sample(g, [](double x) { return std::sin(x); });
    GridFunction d2 = derivative(f, 2);
    double err = 0.0;
    for (int i = 0; i < g.n_points; ++i)
        err = std::max(err, std::abs(d2[i] + Complex(std::sin(g.node(i)))));
    CHECK(err < 1e-8);
}

TEST_CASE("derivative exact on quartics (both orders)") {
    Grid g(-1.0, 2.0, 151);
    GridFunction f = sample(g, [](double x) { return 1.0 + x - x * x + 0.5 * x * x * x + 2.0 * std::pow(x, 4); });
    GridFunction d1 = derivative(f, 1);
    GridFunction d2 = derivative(f, 2);
    double e1 = 0.0, e2 = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.node(i);
        e1 = std::max(e1, std::abs(d1[i] - Complex(1.0 - 2.0 * x + 1.5 * x * x + 8.0 * x * x * x)));
        e2 = std::max(e2, std::abs(d2[i] - Complex(-2.0 + 3.0 * x + 24.0 * x * x)));
    }
    CHECK(e1 < 1e-10);
    CHECK(e2 < 1e-8);
}

TEST_CASE("derivative rejects bad order") {
    Grid g(-1.0, 1.0, 101);
    GridFunction f = sample(g, [](double x) { return x; });
    CHECK_THROWS_AS(derivative(f, 3), std::invalid_argument);
    CHECK_THROWS_AS(derivative(f, 0), std::invalid_argument);
}

TEST_CASE("derivative is linear") {
    Grid g(-3.0, 3.0, 301);
    GridFunction f = random_localized(g, 11);
    GridFunction h = random_localized(g, 22);
    const Complex a(0.7, -0.3), b(-1.2, 0.4);
    GridFunction lhs = derivative(a * f + b * h, 1);
    GridFunction rhs = a * derivative(f, 1) + b * derivative(h, 1);
    CHECK(sup_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("integrate constant and odd cubic") {
    Grid g01(0.0, 1.0, 101);
    GridFunction one = sample(g01, [](double) { return 1.0; });
    CHECK(integrate(one).real() == doctest::Approx(1.0).epsilon(1e-14));

    Grid g(-1.0, 1.0, 101);
    GridFunction x3 = sample(g, [](double x) { return x * x * x; });
    CHECK(std::abs(integrate(x3)) < 1e-14);
}

TEST_CASE("integrate gaussian to sqrt(pi)") {
    Grid g(-8.0, 8.0, 1601);
    GridFunction f = sample(g, [](double x) { return std::exp(-x * x); });
    CHECK(std::abs(integrate(f).real() - std::sqrt(kPi)) < 1e-10);
}

TEST_CASE("integrate rejects even point counts") {
    Grid g(0.0, 1.0, 100);
    GridFunction f = sample(g, [](double) { return 1.0; });
    CHECK_THROWS_AS(integrate(f), std::invalid_argument);
}

TEST_CASE("integrate rejects non-finite input") {
    Grid g(0.0, 1.0, 101);
    GridFunction f = sample(g, [](double) { return 1.0; });
    f[3] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(integrate(f), std::invalid_argument);
}

TEST_CASE("inner product: normalized gaussian, conjugate symmetry") {
    Grid g(-8.0, 8.0, 1601);
    GridFunction f = sample(g, [](double x) {
        return std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    });
    CHECK(std::abs(inner_product(f, f).real() - 1.0) < 1e-10);

    GridFunction a = random_localized(g, 5);
    GridFunction b = random_localized(g, 6);
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-14);
}

TEST_CASE("inner product: hermite orthogonality by quadrature") {
    Grid g(-8.0, 8.0, 1601);
    GridFunction h0 = sample(g, [](double x) { return std::exp(-0.5 * x * x); });
    GridFunction h1 = sample(g, [](double x) { return 2.0 * x * std::exp(-0.5 * x * x); });
    CHECK(std::abs(inner_product(h0, h1)) < 1e-10);
}

TEST_CASE("inner product rejects grid mismatch") {
    Grid g1(-1.0, 1.0, 101), g2(-1.0, 1.0, 201);
    GridFunction a = sample(g1, [](double x) { return x; });
    GridFunction b = sample(g2, [](double x) { return x; });
    CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
}

TEST_CASE("cumulative integral basics") {
    Grid g(-3.0, 3.0, 601);
    GridFunction one = sample(g, [](double) { return 1.0; });
    GridFunction F = cumulative_integral(one, 0.0);
    double err = 0.0;
    for (int i = 0; i < g.n_points; ++i)
        err = std::max(err, std::abs(F[i] - Complex(g.node(i))));
    CHECK(err < 1e-12);

    GridFunction lin = sample(g, [](double x) { return 2.0 * x; });
    GridFunction F2 = cumulative_integral(lin, 0.0);
    err = 0.0;
    for (int i = 0; i < g.n_points; ++i)
        err = std::max(err, std::abs(F2[i] - Complex(g.node(i) * g.node(i))));
    CHECK(err < 1e-10);
}

TEST_CASE("cumulative integral of cosh is sinh") {
    Grid g(-3.0, 3.0, 601);
    GridFunction f = sample(g, [](double x) { return std::cosh(x); });
    GridFunction F = cumulative_integral(f, 0.0);
    double err = 0.0;
    for (int i = 0; i < g.n_points; ++i)
        err = std::max(err, std::abs(F[i] - Complex(std::sinh(g.node(i)))));
    CHECK(err < 1e-8);
}

TEST_CASE("cumulative integral rejects out-of-range anchor") {
    Grid g(-1.0, 1.0, 101);
    GridFunction f = sample(g, [](double x) { return x; });
    CHECK_THROWS_AS(cumulative_integral(f, 2.0), std::invalid_argument);
}

TEST_CASE("fundamental theorem round trips") {
    Grid g(-4.0, 4.0, 801);
    GridFunction F = sample(g, [](double x) { return std::exp(-0.3 * x * x) * std::cos(x); });
    const Complex total = integrate(derivative(F, 1));
    CHECK(std::abs(total - (F[g.n_points - 1] - F[0])) < 1e-9);

    GridFunction f = sample(g, [](double x) { return std::sin(2.0 * x) + 0.1 * x; });
    GridFunction back = derivative(cumulative_integral(f, 0.0), 1);
    double err = 0.0;
    for (int i = 4; i < g.n_points - 4; ++i) err = std::max(err, std::abs(back[i] - f[i]));
    CHECK(err < 1e-7);
}

}  // TEST_SUITE
