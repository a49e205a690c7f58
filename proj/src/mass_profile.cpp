#include "pdmcs/mass_profile.hpp"

#include <cmath>

#include "pdmcs/numerics.hpp"

namespace pdmcs {

namespace {

// Fixed-step composite Simpson of a scalar function over [a, b].
double simpson_scalar(const std::function<double(double)>& fn, double a, double b) {
    const double len = std::abs(b - a);
    int n = std::max(32, static_cast<int>(std::ceil(len / 5e-4)));
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = fn(a) + fn(b);
    for (int i = 1; i < n; i += 2) acc += 4.0 * fn(a + i * h);
    for (int i = 2; i < n; i += 2) acc += 2.0 * fn(a + i * h);
    return acc * h / 3.0;
}

// 5-point central stencils for the CustomNumeric fallback derivatives.
constexpr double kFdStep = 1e-3;

double stencil_d1(const std::function<double(double)>& fn, double x, double h) {
    return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h);
}

double stencil_d2(const std::function<double(double)>& fn, double x, double h) {
    return (-fn(x - 2 * h) + 16 * fn(x - h) - 30 * fn(x) + 16 * fn(x + h) -
            fn(x + 2 * h)) /
           (12 * h * h);
}

}  // namespace

MassProfile MassProfile::constant() { return MassProfile(MassKind::Constant, 0.0); }

MassProfile MassProfile::rational_case1(double gamma) {
    if (gamma <= 0.0)
        throw std::domain_error("rational_case1: gamma must be > 0 to keep m positive");
    return MassProfile(MassKind::RationalCase1, gamma);
}

MassProfile MassProfile::cosh_case2(double gamma) {
    if (gamma < 0.0)
        throw std::domain_error("cosh_case2: gamma must be >= 0");
    return MassProfile(MassKind::CoshCase2, gamma);
}

MassProfile MassProfile::custom(std::function<double(double)> m) {
    MassProfile p(MassKind::CustomNumeric, 0.0);
    p.custom_m_ = std::move(m);
    return p;
}

MassProfile make_profile(MassKind kind, double gamma) {
    switch (kind) {
        case MassKind::Constant: return MassProfile::constant();
        case MassKind::RationalCase1: return MassProfile::rational_case1(gamma);
        case MassKind::CoshCase2: return MassProfile::cosh_case2(gamma);
        default:
            throw std::invalid_argument("make_profile: CustomNumeric needs an evaluator");
    }
}

double MassProfile::m(double x) const {
    switch (kind_) {
        case MassKind::Constant: return 1.0;
        case MassKind::RationalCase1: {
            const double r = (gamma_ + x * x) / (1.0 + x * x);
            return r * r;
        }
        case MassKind::CoshCase2: {
            const double c = std::cosh(gamma_ * x);
            return c * c;
        }
        case MassKind::CustomNumeric: return custom_m_(x);
    }
    return 1.0;
}

double MassProfile::m_prime(double x) const {
    switch (kind_) {
        case MassKind::Constant: return 0.0;
        case MassKind::RationalCase1: {
            const double s = 1.0 + x * x;
            return 4.0 * x * (1.0 - gamma_) * (gamma_ + x * x) / (s * s * s);
        }
        case MassKind::CoshCase2: return gamma_ * std::sinh(2.0 * gamma_ * x);
        case MassKind::CustomNumeric: return stencil_d1(custom_m_, x, kFdStep);
    }
    return 0.0;
}

double MassProfile::m_second(double x) const {
    switch (kind_) {
        case MassKind::Constant: return 0.0;
        case MassKind::RationalCase1: {
            const double s = 1.0 + x * x;
            const double x2 = x * x;
            return 4.0 * (1.0 - gamma_) * (gamma_ + (3.0 - 5.0 * gamma_) * x2 - 3.0 * x2 * x2) /
                   (s * s * s * s);
        }
        case MassKind::CoshCase2:
            return 2.0 * gamma_ * gamma_ * std::cosh(2.0 * gamma_ * x);
        case MassKind::CustomNumeric: return stencil_d2(custom_m_, x, kFdStep);
    }
    return 0.0;
}

double MassProfile::sqrt_m(double x) const {
    switch (kind_) {
        case MassKind::Constant: return 1.0;
        case MassKind::RationalCase1: return (gamma_ + x * x) / (1.0 + x * x);
        case MassKind::CoshCase2: return std::cosh(gamma_ * x);
        case MassKind::CustomNumeric: return std::sqrt(custom_m_(x));
    }
    return 1.0;
}

double MassProfile::f(double x) const {
    switch (kind_) {
        case MassKind::Constant: return x;
        case MassKind::RationalCase1:
            return x + (gamma_ - 1.0) * std::atan(x);
        case MassKind::CoshCase2: {
            // sinh(g x)/g; series below g ~ 1e-6 so the constant-mass limit
            // is exact instead of 0/0.
            if (std::abs(gamma_) < 1e-6) {
                const double gx = gamma_ * x;
                return x * (1.0 + gx * gx / 6.0 + gx * gx * gx * gx / 120.0);
            }
            return std::sinh(gamma_ * x) / gamma_;
        }
        case MassKind::CustomNumeric:
            return simpson_scalar([this](double t) { return std::sqrt(custom_m_(t)); },
                                  0.0, x);
    }
    return x;
}

GridFunction numeric_mapping(const MassProfile& profile, const Grid& grid) {
    if (grid.x_min > 0.0 || grid.x_max < 0.0)
        throw std::invalid_argument("numeric_mapping: grid must contain x = 0");
    GridFunction sq = sample(grid, [&](double x) { return profile.sqrt_m(x); });
    return cumulative_integral(sq, 0.0);
}

ProfileDiagnostics verify_profile(const MassProfile& profile, const Grid& grid) {
    ProfileDiagnostics d{};
    GridFunction mv = sample(grid, [&](double x) { return profile.m(x); });

    d.min_m = mv[0].real();
    for (const auto& v : mv.values) d.min_m = std::min(d.min_m, v.real());
    d.positive = d.min_m > 0.0;

    GridFunction fmap = profile.has_closed_form_mapping()
                            ? sample(grid, [&](double x) { return profile.f(x); })
                            : numeric_mapping(profile, grid);
    GridFunction fp = derivative(fmap, 1);
    double r1 = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        const double sm = d.positive ? profile.sqrt_m(grid.node(i)) : 0.0;
        r1 = std::max(r1, std::abs(fp[i].real() - sm));
    }
    d.mapping_residual = r1;

    GridFunction mp = derivative(mv, 1);
    double r2 = 0.0;
    for (int i = 0; i < grid.n_points; ++i)
        r2 = std::max(r2, std::abs(mp[i].real() - profile.m_prime(grid.node(i))));
    d.m_prime_residual = r2;
    return d;
}

}  // namespace pdmcs
