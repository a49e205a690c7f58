#include "pdmcs/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace pdmcs {

namespace {

// 4th-order stencil rows (uniform spacing h factored out).
// First derivative.
constexpr double d1_left0[5] = {-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -1.0 / 4.0};
constexpr double d1_left1[5] = {-1.0 / 4.0, -5.0 / 6.0, 3.0 / 2.0, -1.0 / 2.0, 1.0 / 12.0};
// Second derivative.
constexpr double d2_left0[6] = {15.0 / 4.0,  -77.0 / 6.0, 107.0 / 6.0,
                                -13.0,       61.0 / 12.0, -5.0 / 6.0};
constexpr double d2_left1[6] = {5.0 / 6.0, -5.0 / 4.0, -1.0 / 3.0,
                                7.0 / 6.0, -1.0 / 2.0, 1.0 / 12.0};

inline Complex d1_at(const Complex* v, int i, int n, double inv_h) {
    if (i == 0)
        return inv_h * (d1_left0[0] * v[0] + d1_left0[1] * v[1] + d1_left0[2] * v[2] +
                        d1_left0[3] * v[3] + d1_left0[4] * v[4]);
    if (i == 1)
        return inv_h * (d1_left1[0] * v[0] + d1_left1[1] * v[1] + d1_left1[2] * v[2] +
                        d1_left1[3] * v[3] + d1_left1[4] * v[4]);
    if (i == n - 1)
        return -inv_h * (d1_left0[0] * v[n - 1] + d1_left0[1] * v[n - 2] +
                         d1_left0[2] * v[n - 3] + d1_left0[3] * v[n - 4] +
                         d1_left0[4] * v[n - 5]);
    if (i == n - 2)
        return -inv_h * (d1_left1[0] * v[n - 1] + d1_left1[1] * v[n - 2] +
                         d1_left1[2] * v[n - 3] + d1_left1[3] * v[n - 4] +
                         d1_left1[4] * v[n - 5]);
    return inv_h * (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / 12.0;
}

inline Complex d2_at(const Complex* v, int i, int n, double inv_h2) {
    if (i == 0)
        return inv_h2 * (d2_left0[0] * v[0] + d2_left0[1] * v[1] + d2_left0[2] * v[2] +
                         d2_left0[3] * v[3] + d2_left0[4] * v[4] + d2_left0[5] * v[5]);
    if (i == 1)
        return inv_h2 * (d2_left1[0] * v[0] + d2_left1[1] * v[1] + d2_left1[2] * v[2] +
                         d2_left1[3] * v[3] + d2_left1[4] * v[4] + d2_left1[5] * v[5]);
    if (i == n - 1)
        return inv_h2 * (d2_left0[0] * v[n - 1] + d2_left0[1] * v[n - 2] +
                         d2_left0[2] * v[n - 3] + d2_left0[3] * v[n - 4] +
                         d2_left0[4] * v[n - 5] + d2_left0[5] * v[n - 6]);
    if (i == n - 2)
        return inv_h2 * (d2_left1[0] * v[n - 1] + d2_left1[1] * v[n - 2] +
                         d2_left1[2] * v[n - 3] + d2_left1[3] * v[n - 4] +
                         d2_left1[4] * v[n - 5] + d2_left1[5] * v[n - 6]);
    return inv_h2 *
           (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) /
           12.0;
}

void check_derivative_args(const GridFunction& f, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative: order must be 1 or 2");
    if (f.grid.n_points < 9)
        throw std::invalid_argument("derivative: grid too small for 4th-order stencils");
}

// Grids in this project are small (~10^3 nodes); only spend threads on
// large inputs so results stay cheap and bitwise-stable either way.
constexpr int kParallelThreshold = 1 << 14;

}  // namespace

GridFunction derivative(const GridFunction& f, int order) {
    check_derivative_args(f, order);
    const int n = f.grid.n_points;
    const double h = f.grid.spacing();
    const Complex* v = f.values.data();
    GridFunction out(f.grid);

    if (order == 1) {
        const double inv_h = 1.0 / h;
#pragma omp parallel for if (n >= kParallelThreshold)
        for (int i = 0; i < n; ++i) out[i] = d1_at(v, i, n, inv_h);
    } else {
        const double inv_h2 = 1.0 / (h * h);
#pragma omp parallel for if (n >= kParallelThreshold)
        for (int i = 0; i < n; ++i) out[i] = d2_at(v, i, n, inv_h2);
    }
    return out;
}

GridFunction ref::derivative(const GridFunction& f, int order) {
    check_derivative_args(f, order);
    const int n = f.grid.n_points;
    const double h = f.grid.spacing();
    const Complex* v = f.values.data();
    GridFunction out(f.grid);
    if (order == 1) {
        const double inv_h = 1.0 / h;
        for (int i = 0; i < n; ++i) out[i] = d1_at(v, i, n, inv_h);
    } else {
        const double inv_h2 = 1.0 / (h * h);
        for (int i = 0; i < n; ++i) out[i] = d2_at(v, i, n, inv_h2);
    }
    return out;
}

Complex integrate(const GridFunction& f) {
    const int n = f.grid.n_points;
    if (n % 2 == 0)
        throw std::invalid_argument("integrate: composite Simpson needs odd n_points");
    if (!all_finite(f))
        throw std::invalid_argument("integrate: non-finite values");
    const double h = f.grid.spacing();
    Complex acc = f[0] + f[n - 1];
    for (int i = 1; i < n - 1; i += 2) acc += 4.0 * f[i];
    for (int i = 2; i < n - 1; i += 2) acc += 2.0 * f[i];
    return acc * (h / 3.0);
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    GridFunction prod(f.grid);
    for (int i = 0; i < f.size(); ++i) prod[i] = std::conj(f[i]) * g[i];
    return integrate(prod);
}

GridFunction cumulative_integral(const GridFunction& f, double anchor) {
    const Grid& g = f.grid;
    if (anchor < g.x_min || anchor > g.x_max)
        throw std::invalid_argument("cumulative_integral: anchor out of range");
    const int n = g.n_points;
    const double h = g.spacing();
    const Complex* v = f.values.data();

    // Integral over each interval from the cubic through four nearby nodes;
    // exact for cubics, matching Simpson's degree of exactness.
    auto seg = [&](int i) {
        if (i == 0)
            return (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]) * (h / 24.0);
        if (i == n - 2)
            return (v[n - 4] - 5.0 * v[n - 3] + 19.0 * v[n - 2] + 9.0 * v[n - 1]) *
                   (h / 24.0);
        return (-v[i - 1] + 13.0 * v[i] + 13.0 * v[i + 1] - v[i + 2]) * (h / 24.0);
    };

    // Accumulate outward from the anchor node. A single left-to-right prefix
    // sum re-anchored by subtraction loses everything near the anchor when
    // the integrand is orders of magnitude larger at the grid ends.
    const int i0 = static_cast<int>(std::lround((anchor - g.x_min) / h));
    GridFunction out(g);
    out[i0] = Complex{};
    for (int i = i0; i < n - 1; ++i) out[i + 1] = out[i] + seg(i);
    for (int i = i0 - 1; i >= 0; --i) out[i] = out[i + 1] - seg(i);
    return out;
}

double l2_norm(const GridFunction& f) {
    GridFunction sq(f.grid);
    for (int i = 0; i < f.size(); ++i) sq[i] = std::norm(f[i]);
    return std::sqrt(integrate(sq).real());
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double sup_distance(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    double m = 0.0;
    for (int i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
    return m;
}

}  // namespace pdmcs
