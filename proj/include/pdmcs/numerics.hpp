#pragma once

#include "pdmcs/grid.hpp"

namespace pdmcs {

/// 4th-order finite-difference derivative (order 1 or 2). One-sided
/// stencils on the two rows next to each boundary, central elsewhere.
/// Exact for polynomials up to degree 4.
GridFunction derivative(const GridFunction& f, int order);

/// Composite Simpson integral over the whole grid. Requires odd n_points.
Complex integrate(const GridFunction& f);

/// integrate(conj(f) * g); conjugate-linear in the first argument.
Complex inner_product(const GridFunction& f, const GridFunction& g);

/// F(x) = int_anchor^x f dx', sampled on the grid, zero at the node
/// nearest to anchor. 4th-order accurate (cubic-interpolant interval rule).
GridFunction cumulative_integral(const GridFunction& f, double anchor);

/// sqrt(integral |f|^2 dx)
double l2_norm(const GridFunction& f);

double sup_norm(const GridFunction& f);

/// ||f - g||_inf on a shared grid.
double sup_distance(const GridFunction& f, const GridFunction& g);

namespace ref {
/// Plain serial loop versions of the parallel kernels, kept as the
/// comparison baseline for tests and the benchmark.
GridFunction derivative(const GridFunction& f, int order);
}  // namespace ref

}  // namespace pdmcs
