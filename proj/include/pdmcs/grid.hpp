#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pdmcs {

using Complex = std::complex<double>;

/// Uniform 1-D grid on [x_min, x_max].
struct Grid {
    double x_min;
    double x_max;
    int n_points;

    Grid(double x_min_, double x_max_, int n_points_)
        : x_min(x_min_), x_max(x_max_), n_points(n_points_) {
        if (!(x_min < x_max))
            throw std::invalid_argument("Grid: x_min must be < x_max");
        if (n_points < 9)
            throw std::invalid_argument("Grid: need at least 9 points");
    }

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double node(int i) const { return x_min + i * spacing(); }

    bool operator==(const Grid&) const = default;
};

/// Complex-valued samples on a Grid; the common currency of all operators.
struct GridFunction {
    Grid grid;
    std::vector<Complex> values;

    explicit GridFunction(const Grid& g) : grid(g), values(g.n_points, Complex{}) {}

    GridFunction(const Grid& g, std::vector<Complex> v)
        : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.n_points)
            throw std::invalid_argument("GridFunction: values length must equal n_points");
    }

    int size() const { return grid.n_points; }
    Complex& operator[](int i) { return values[i]; }
    const Complex& operator[](int i) const { return values[i]; }
};

template <class F>
GridFunction sample(const Grid& g, F&& f) {
    GridFunction out(g);
    for (int i = 0; i < g.n_points; ++i) out[i] = Complex(f(g.node(i)));
    return out;
}

inline void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("grid mismatch");
}

inline bool all_finite(const GridFunction& f) {
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

inline GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline GridFunction operator*(Complex c, const GridFunction& f) {
    GridFunction out(f.grid);
    for (int i = 0; i < f.size(); ++i) out[i] = c * f[i];
    return out;
}

/// Pointwise product.
inline GridFunction hadamard(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

}  // namespace pdmcs
