// qbatt: command-line front end: simulate, sweep, validate, presets
//
// Exit codes: 0 success, 1 parse/validation failure, 2 solver failure.

#include "qbatt/config.hpp"
#include "qbatt/csv.hpp"
#include "qbatt/errors.hpp"
#include "qbatt/sweep.hpp"
#include "qbatt/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitSolver = 2;

constexpr const char* kOutputRootEnv = "QBATT_OUTPUT_ROOT";

qbatt::SweepSpec load_spec(const std::string& config, const std::string& preset) {
    if (!preset.empty()) {
        const auto* p = qbatt::find_preset(preset);
        if (!p) throw qbatt::ParseError("", 0, "unknown preset '" + preset + "' (see `qbatt presets --list`)");
        return qbatt::parse_config(p->text);
    }
    return qbatt::load_config(config);
}

// --out, then the config's output_dir, then $QBATT_OUTPUT_ROOT/<label> (root defaults to ./qbatt-out).
void resolve_output(qbatt::SweepSpec& spec, const std::string& out) {
    if (!out.empty()) {
        spec.output_dir = out;
    } else if (spec.output_dir.empty()) {
        const char* root = std::getenv(kOutputRootEnv);
        spec.output_dir = (std::filesystem::path(root && *root ? root : "qbatt-out") / spec.label).string();
    }
}

int report_records(const qbatt::SweepSpec& spec, const std::vector<qbatt::RunRecord>& records) {
    int failed = 0;
    for (const auto& rec : records) {
        const auto& p = rec.params;
        if (rec.ok()) {
            const auto& s = *rec.summary;
            std::printf("R=%-6g delta=%-6g d=%-6g Omega=%-6g max dE_B=%.6f max W/Wmax=%.6f settle=%.4g  %s\n", p.R,
                        p.delta, p.d, p.Omega, s.max_dE_B, s.max_W_ratio, s.settle_time,
                        rec.series_path.generic_string().c_str());
        } else {
            ++failed;
            std::fprintf(stderr, "FAILED R=%g delta=%g d=%g Omega=%g: %s\n", p.R, p.delta, p.d, p.Omega,
                         rec.error.c_str());
        }
    }
    std::printf("index: %s\n", (std::filesystem::path(spec.output_dir) / "index.csv").string().c_str());
    return failed == 0 ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Charging dynamics and ergotropy of a frequency-modulated two-qubit quantum battery"};
    app.require_subcommand(1);

    std::string config, preset, out;
    unsigned workers = 1;
    bool cross_check = false;

    auto* simulate = app.add_subcommand("simulate", "Run a single-point config");
    simulate->add_option("--config", config, "Config file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--out", out, "Output directory (overrides output_dir)");

    auto* sweep = app.add_subcommand("sweep", "Run every grid point of a config");
    auto* sweep_cfg = sweep->add_option("--config", config, "Config file")->check(CLI::ExistingFile);
    sweep->add_option("--preset", preset, "Built-in preset name instead of --config")->excludes(sweep_cfg);
    sweep->add_option("--workers", workers, "Concurrent grid points")->check(CLI::Range(1u, 1024u));
    sweep->add_option("--out", out, "Output directory (overrides output_dir)");
    sweep->add_flag("--cross-check", cross_check, "Also run the quadrature oracle per point");

    bool fast = false, inject_fault = false;
    double quadrature_dt = 1e-3;
    auto* validate = app.add_subcommand("validate", "Run the oracle suite");
    validate->add_flag("--fast", fast, "Shorter horizons and fewer samples");
    validate->add_option("--quadrature-dt", quadrature_dt, "Quadrature oracle step");
    validate->add_flag("--inject-sign-fault", inject_fault, "Flip the memory-term sign (fault injection)")
        ->group("");

    bool list = false;
    std::string show, write_dir;
    auto* presets_cmd = app.add_subcommand("presets", "Built-in figure presets");
    presets_cmd->add_flag("--list", list, "List preset names");
    presets_cmd->add_option("--show", show, "Print one preset");
    presets_cmd->add_option("--write", write_dir, "Write all presets as <name>.cfg into a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*simulate || *sweep) {
            if (*sweep && config.empty() && preset.empty()) {
                std::cerr << "sweep: one of --config or --preset is required\n";
                return kExitInvalid;
            }
            auto spec = load_spec(config, preset);
            resolve_output(spec, out);
            if (*simulate && spec.grid().size() != 1) {
                std::cerr << "simulate: config spans " << spec.grid().size()
                          << " grid points; use `qbatt sweep` for grids\n";
                return kExitInvalid;
            }
            const auto records = qbatt::run_sweep(spec, {*sweep ? workers : 1u, cross_check});
            return report_records(spec, records);
        }

        if (*validate) {
            qbatt::ValidateOptions opt;
            opt.fast = fast;
            opt.quadrature_dt = quadrature_dt;
            opt.invert_memory_sign = inject_fault;
            const auto report = qbatt::run_validation(opt);
            for (const auto& c : report.checks) {
                std::printf("%-4s %-22s residual=%-12.4g tol=%-8.1g %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                            c.residual, c.tolerance, c.detail.c_str());
            }
            std::printf("%s\n", report.passed() ? "all checks passed" : "validation FAILED");
            return report.passed() ? kExitOk : kExitInvalid;
        }

        if (*presets_cmd) {
            if (!show.empty()) {
                const auto* p = qbatt::find_preset(show);
                if (!p) {
                    std::cerr << "unknown preset '" << show << "'\n";
                    return kExitInvalid;
                }
                std::cout << p->text;
                return kExitOk;
            }
            if (!write_dir.empty()) {
                std::filesystem::create_directories(write_dir);
                for (const auto& p : qbatt::presets()) {
                    std::ofstream(std::filesystem::path(write_dir) / (std::string(p.name) + ".cfg")) << p.text;
                }
                return kExitOk;
            }
            for (const auto& p : qbatt::presets()) std::cout << p.name << '\n';
            return kExitOk;
        }
    } catch (const qbatt::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const qbatt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}
