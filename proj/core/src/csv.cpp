#include "qbatt/csv.hpp"

#include "qbatt/errors.hpp"
#include "qbatt/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace qbatt {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_number(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

}  // namespace

void write_series_csv(const std::filesystem::path& path, const Trajectory& traj, const ObservableSeries& series) {
    auto out = open_for_write(path);
    out << kSeriesHeader << '\n';
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < series.size(); ++k) {
        const cplx e = traj.survival ? (*traj.survival)[k] : cplx(nan, nan);
        out << format_number(series.times[k]) << ',' << format_number(e.real()) << ','
            << format_number(e.imag()) << ',' << format_number(traj.survival ? std::norm(e) : nan) << ','
            << format_number(series.p_e_A[k]) << ',' << format_number(series.p_e_B[k]) << ','
            << format_number(series.dE_B[k]) << ',' << format_number(series.W_ratio[k]) << '\n';
    }
    if (!out) throw Error("write failed: " + path.string());
}

void write_index_csv(const std::filesystem::path& path, const std::string& label,
                     const std::vector<RunRecord>& records) {
    auto out = open_for_write(path);
    out << kIndexHeader << '\n';
    for (const auto& rec : records) {
        if (!rec.ok()) continue;
        const auto& p = rec.params;
        const auto& s = *rec.summary;
        out << label << ',' << format_number(p.R) << ',' << format_number(p.delta) << ',' << format_number(p.d)
            << ',' << format_number(p.Omega) << ',' << format_number(p.r1) << ',' << format_number(s.max_dE_B)
            << ',' << format_number(s.t_at_max) << ',' << format_number(s.max_W_ratio) << ','
            << format_number(s.settle_time) << ',' << format_number(s.terminal_dE_B) << ','
            << rec.series_path.generic_string() << '\n';
    }
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace qbatt
