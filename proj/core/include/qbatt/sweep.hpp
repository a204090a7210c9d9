// sweep.hpp: Grid execution over a SweepSpec with per-point CSV output

#pragma once

#include "qbatt/config.hpp"
#include "qbatt/model.hpp"
#include "qbatt/observables.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qbatt {

struct RunRecord {
    ModelParams params;
    std::optional<ChargingSummary> summary;  // empty when the solve failed
    std::filesystem::path series_path;       // relative to the output directory
    SolverStats stats;
    std::optional<double> oracle_residual;   // sup |E_rk - E_quadrature| when cross-checked
    std::string error;

    bool ok() const noexcept { return error.empty(); }
};

struct SweepOptions {
    unsigned workers{1};
    // Also run the quadrature oracle for every point and record the residual.
    bool cross_check{false};
};

// Writes one series CSV per point under <output_dir>/series plus the index and
// diagnostics tables; failures.csv appears only when some point
// fails. Records come back in grid order regardless of workers.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Series file name for one grid point, e.g. "fig2_R5_delta0_d10_Omega0.5.csv".
std::string series_file_name(const std::string& label, const ModelParams& p);

}  // namespace qbatt
