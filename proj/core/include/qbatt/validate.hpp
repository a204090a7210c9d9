// validate.hpp: Oracle suite behind `qbatt validate`

#pragma once

#include <string>
#include <vector>

namespace qbatt {

struct CheckResult {
    std::string name;
    bool passed{false};
    double residual{0.0};   // worst observed deviation
    double tolerance{0.0};
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct ValidateOptions {
    // Shorter horizons and fewer samples; same tolerances.
    bool fast{false};
    double quadrature_dt{1e-3};
    // Fault-injection hook: flips the sign of the memory term in every solver.
    bool invert_memory_sign{false};
};

// Runs: analytic_limit, dual_solver, reduction_consistency, ergotropy_bruteforce,
// jacobi_anger, decoherence_free. Throws ConfigError up front when quadrature_dt
// is too coarse for the check grid (validate mode is strict).
ValidationReport run_validation(const ValidateOptions& options = {});

}  // namespace qbatt
