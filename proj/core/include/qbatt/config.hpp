// config.hpp: Sweep configuration documents and the built-in figure presets
//
// A config is a YAML mapping (block or flow style). Recognized keys:
//   R, delta, d, Omega        scalar or list; lists span a cartesian grid
//   r1                        charger coupling fraction, r2 = sqrt(1 - r1^2)
//   c01_re, c01_im, c02_re, c02_im
//   t_max, dt_out, rel_tol, abs_tol, quadrature_dt
//   output_dir, label
//   include_unmodulated       also run d = 0, Omega = 0 for every (R, delta)
//   settle_band, max_grid
//   max_steps                 integrator step budget per grid point

#pragma once

#include "qbatt/model.hpp"
#include "qbatt/observables.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qbatt {

struct SweepSpec {
    ModelParams base;
    std::vector<double> R;
    std::vector<double> delta;
    std::vector<double> d;
    std::vector<double> Omega;
    bool include_unmodulated{false};
    SolverConfig cfg;
    std::string output_dir;  // empty: caller picks (CLI uses QBATT_OUTPUT_ROOT/label)
    std::string label{"run"};
    double settle_band{kDefaultSettleBand};
    std::size_t max_grid{10'000};

    // Every grid point, sorted by (R, delta, d, Omega) and de-duplicated.
    std::vector<ModelParams> grid() const;
};

// Throws ParseError naming the key and line on any schema or invariant violation.
SweepSpec parse_config(std::string_view text);
SweepSpec load_config(const std::filesystem::path& path);

struct Preset {
    std::string_view name;
    std::string_view text;
};

const std::vector<Preset>& presets();
// nullptr when no preset has that name.
const Preset* find_preset(std::string_view name);

}  // namespace qbatt
