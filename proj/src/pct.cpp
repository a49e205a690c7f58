#include "pdmcs/pct.hpp"

#include <cmath>

#include "pdmcs/numerics.hpp"

namespace pdmcs {

namespace {
constexpr int kHermiteMax = 60;
const double kPi = 4.0 * std::atan(1.0);
}  // namespace

double hermite_eval(int n, double y) {
    if (n < 0) throw std::invalid_argument("hermite_eval: n must be >= 0");
    if (n > kHermiteMax)
        throw std::invalid_argument("hermite_eval: n exceeds double-precision cap of 60");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * y;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * y * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

double ReferenceOscillator::potential(double y) const {
    if (kind == ReferenceKind::Harmonic) return 0.5 * y * y;
    const double y2 = y * y;
    const double s = 1.0 + 2.0 * y2;
    return 0.5 * (y2 + 8.0 * (2.0 * y2 - 1.0) / (s * s));
}

double ReferenceOscillator::energy(int n) const {
    if (n < 0) throw unsupported_quantum_number("energy: n must be >= 0");
    if (kind == ReferenceKind::Harmonic) return n + 0.5;
    if (n == 1 || n == 2)
        throw unsupported_quantum_number(
            "energy: nonlinear oscillator has no n = 1, 2 levels");
    return n - 1.5;
}

bool ReferenceOscillator::has_closed_form(int n) const {
    if (kind == ReferenceKind::Harmonic) return n >= 0 && n <= kHermiteMax;
    return n == 0;
}

double ReferenceOscillator::psi(int n, double y) const {
    if (!has_closed_form(n))
        throw unsupported_quantum_number("psi: no closed form for this n");
    if (kind == ReferenceKind::Harmonic) {
        const double log_nn =
            -0.5 * (0.5 * std::log(kPi) + n * std::log(2.0) + std::lgamma(n + 1.0));
        return std::exp(log_nn) * hermite_eval(n, y) * std::exp(-0.5 * y * y);
    }
    // Ground state of the nonlinear oscillator, up to normalization which
    // callers fix by quadrature.
    return std::exp(-0.5 * y * y) / (1.0 + 2.0 * y * y);
}

double ReferenceOscillator::ground_energy() const {
    return kind == ReferenceKind::Harmonic ? 0.5 : -1.5;
}

PdmProblem make_problem(const MassProfile& profile, ReferenceKind reference) {
    return PdmProblem{profile, ReferenceOscillator{reference}};
}

double PdmProblem::effective_potential_at(double x) const {
    const double m = profile.m(x);
    const double mp = profile.m_prime(x);
    const double ms = profile.m_second(x);
    const double correction =
        (1.0 / (8.0 * m)) * (ms / m - 1.75 * (mp / m) * (mp / m));
    return reference.potential(profile.f(x)) + correction;
}

GridFunction PdmProblem::effective_potential(const Grid& grid) const {
    return sample(grid, [&](double x) { return effective_potential_at(x); });
}

GridFunction PdmProblem::eigenfunction(int n, const Grid& grid, double* raw_norm) const {
    if (!reference.has_closed_form(n))
        throw unsupported_quantum_number("eigenfunction: no closed form for this n");
    GridFunction psi = sample(grid, [&](double x) {
        return std::pow(profile.m(x), 0.25) * reference.psi(n, profile.f(x));
    });
    if (reference.kind == ReferenceKind::CarinenaNonlinear) {
        // reference.psi(0, .) is unnormalized; bring it to the same footing
        // before reporting the pre-rescale norm.
        const double n0 = std::sqrt(2.0 / std::sqrt(kPi));
        for (auto& v : psi.values) v *= n0;
    }
    const double norm = l2_norm(psi);
    if (raw_norm) *raw_norm = norm;
    for (auto& v : psi.values) v /= norm;
    return psi;
}

double PdmProblem::energy(int n) const { return reference.energy(n); }

Grid PdmProblem::suggested_grid(int n_points, int n_max) const {
    if (n_points % 2 == 0) ++n_points;

    auto log_envelope = [&](double x) {
        const double f = profile.f(x);
        double le = 0.25 * std::log(profile.m(x)) - 0.5 * f * f;
        if (n_max > 0) le += n_max * std::log(std::max(std::abs(f), 1.0));
        return le;
    };

    double peak = log_envelope(0.0);
    double arg_peak = 0.0;
    for (double x = -12.0; x <= 12.0; x += 0.02) {
        const double le = log_envelope(x);
        if (le > peak) {
            peak = le;
            arg_peak = x;
        }
    }

    const double drop = -30.0;  // ~1e-13 of the peak
    double lo = std::max(0.25, std::abs(arg_peak));
    double hi = 2.0 * lo + 0.5;
    while (log_envelope(hi) - peak > drop || log_envelope(-hi) - peak > drop) {
        lo = hi;
        hi *= 2.0;
        if (hi > 64.0) break;
    }
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (log_envelope(mid) - peak > drop || log_envelope(-mid) - peak > drop)
            lo = mid;
        else
            hi = mid;
    }
    const double half_width = 1.25 * hi;
    return Grid(-half_width, half_width, n_points);
}

}  // namespace pdmcs
