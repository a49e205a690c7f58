#pragma once

#include <functional>

#include "pdmcs/grid.hpp"

namespace pdmcs {

enum class MassKind { Constant, RationalCase1, CoshCase2, CustomNumeric };

/// Position-dependent mass distribution m(x) > 0, its derivatives, and the
/// monotone mapping f(x) = int_0^x sqrt(m) dx'. Analytic for the built-in
/// kinds, stencil/quadrature-backed for CustomNumeric.
class MassProfile {
  public:
    static MassProfile constant();
    static MassProfile rational_case1(double gamma);  // m = (g+x^2)^2/(1+x^2)^2, g > 0
    static MassProfile cosh_case2(double gamma);      // m = cosh^2(g x), g >= 0
    static MassProfile custom(std::function<double(double)> m);

    MassKind kind() const { return kind_; }
    double gamma() const { return gamma_; }
    bool has_closed_form_mapping() const { return kind_ != MassKind::CustomNumeric; }

    double m(double x) const;
    double m_prime(double x) const;
    double m_second(double x) const;
    double sqrt_m(double x) const;
    double f(double x) const;

  private:
    MassProfile(MassKind k, double g) : kind_(k), gamma_(g) {}
    MassKind kind_;
    double gamma_ = 0.0;
    std::function<double(double)> custom_m_;
};

MassProfile make_profile(MassKind kind, double gamma);

/// f sampled by quadrature of sqrt(m), anchored at x = 0. Grid must
/// straddle the origin. Agrees with the closed form for analytic kinds.
GridFunction numeric_mapping(const MassProfile& profile, const Grid& grid);

struct ProfileDiagnostics {
    double min_m;               // minimum of m over the grid
    bool positive;              // min_m > 0
    double mapping_residual;    // sup |d/dx f - sqrt(m)| (stencil)
    double m_prime_residual;    // sup |m' - d/dx m| (analytic vs stencil)
};

ProfileDiagnostics verify_profile(const MassProfile& profile, const Grid& grid);

}  // namespace pdmcs
