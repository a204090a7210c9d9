#include "qbatt/sweep.hpp"

#include "qbatt/csv.hpp"
#include "qbatt/dynamics.hpp"
#include "qbatt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace qbatt {

std::string series_file_name(const std::string& label, const ModelParams& p) {
    return label + "_R" + short_number(p.R) + "_delta" + short_number(p.delta) + "_d" + short_number(p.d) +
           "_Omega" + short_number(p.Omega) + ".csv";
}

namespace {

RunRecord run_point(const SweepSpec& spec, const ModelParams& p, bool cross_check) {
    RunRecord rec;
    rec.params = p;
    try {
        const Trajectory traj = solve_survival(p, spec.cfg);
        const ObservableSeries series = observable_series(traj);
        rec.summary = summarize(series, spec.settle_band);
        rec.stats = traj.stats;
        if (cross_check) {
            const Trajectory oracle = solve_survival_quadrature(p, spec.cfg);
            double worst = 0.0;
            for (std::size_t k = 0; k < traj.size(); ++k) {
                worst = std::max(worst, std::abs((*traj.survival)[k] - (*oracle.survival)[k]));
            }
            rec.oracle_residual = worst;
            rec.stats.warnings.insert(rec.stats.warnings.end(), oracle.stats.warnings.begin(),
                                      oracle.stats.warnings.end());
        }
        rec.series_path = std::filesystem::path("series") / series_file_name(spec.label, p);
        write_series_csv(std::filesystem::path(spec.output_dir) / rec.series_path, traj, series);
    } catch (const Error& e) {
        rec.summary.reset();
        rec.series_path.clear();
        rec.error = e.what();
    }
    return rec;
}

void write_diagnostics(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << "R,delta,d,Omega,accepted_steps,rejected_steps,oracle_residual,warnings\n";
    for (const auto& rec : records) {
        if (!rec.ok()) continue;
        const auto& p = rec.params;
        out << format_number(p.R) << ',' << format_number(p.delta) << ',' << format_number(p.d) << ','
            << format_number(p.Omega) << ',' << rec.stats.accepted_steps << ',' << rec.stats.rejected_steps << ','
            << (rec.oracle_residual ? format_number(*rec.oracle_residual) : std::string()) << ','
            << rec.stats.warnings.size() << '\n';
    }
}

void write_failures(const std::filesystem::path& path, const std::string& label,
                    const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << "label,R,delta,d,Omega,r1,error\n";
    for (const auto& rec : records) {
        if (rec.ok()) continue;
        const auto& p = rec.params;
        std::string msg = rec.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        out << label << ',' << format_number(p.R) << ',' << format_number(p.delta) << ',' << format_number(p.d)
            << ',' << format_number(p.Omega) << ',' << format_number(p.r1) << ',' << msg << '\n';
    }
}

}  // namespace

std::vector<RunRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    if (spec.output_dir.empty()) throw ConfigError("run_sweep: output_dir is not set");
    const std::vector<ModelParams> grid = spec.grid();
    if (grid.size() > spec.max_grid) {
        throw ConfigError("grid has " + std::to_string(grid.size()) + " points, cap is " +
                          std::to_string(spec.max_grid));
    }
    const std::filesystem::path out_dir(spec.output_dir);
    std::filesystem::create_directories(out_dir / "series");

    std::vector<RunRecord> records(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            records[i] = run_point(spec, grid[i], options.cross_check);
        }
    };
    const unsigned workers = std::clamp<unsigned>(options.workers, 1u, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    write_index_csv(out_dir / "index.csv", spec.label, records);
    write_diagnostics(out_dir / "diagnostics.csv", records);
    const bool any_failed = std::any_of(records.begin(), records.end(), [](const auto& r) { return !r.ok(); });
    if (any_failed) {
        write_failures(out_dir / "failures.csv", spec.label, records);
    } else {
        std::filesystem::remove(out_dir / "failures.csv");
    }
    return records;
}

}  // namespace qbatt
