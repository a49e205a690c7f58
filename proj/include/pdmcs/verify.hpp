#pragma once

#include "pdmcs/coherent.hpp"
#include "pdmcs/report.hpp"
#include "pdmcs/spectral.hpp"

namespace pdmcs {

struct CriterionResult {
    int id;
    std::string label;
    std::vector<CheckRecord> checks;
    double seconds = 0.0;

    void add(CheckRecord c) { checks.push_back(std::move(c)); }

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// The full verification battery: closed-form spectra against the
/// finite-difference oracle, ladder/factorization identities, coherent-state
/// eigenvalue and uncertainty checks, Perelomov equivalence, constant-mass
/// reductions, and the second-solution identity. Criterion 12 (total wall
/// time) is appended from the measured runtime of the others.
std::vector<CriterionResult> run_acceptance_criteria();

/// Flattened into a single Report (used by `verify-all`).
Report acceptance_report();

/// Deterministic smooth localized test state: polynomial-in-f times the
/// Gaussian envelope, normalized. Decays at the grid ends for every profile.
GridFunction smooth_bump(const MassProfile& profile, const Grid& grid);

}  // namespace pdmcs
