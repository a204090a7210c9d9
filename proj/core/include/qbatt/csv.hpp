// csv.hpp: Series and index CSV writers (17 significant digits, no timestamps)

#pragma once

#include "qbatt/model.hpp"
#include "qbatt/observables.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qbatt {

struct RunRecord;

inline constexpr const char* kSeriesHeader = "t,re_E,im_E,abs_E2,p_e_A,p_e_B,dE_B_over_w0,W_over_Wmax";
inline constexpr const char* kIndexHeader =
    "label,R,delta,d,Omega,r1,max_dE_B,t_at_max,max_W_ratio,settle_time,terminal_dE_B,series_path";

// "%.17g"; round-trips every double.
std::string format_number(double x);
// Shortest round-trip form, used in file names.
std::string short_number(double x);

// Survival columns are written as nan when the trajectory carries no E(t).
void write_series_csv(const std::filesystem::path& path, const Trajectory& traj, const ObservableSeries& series);
void write_index_csv(const std::filesystem::path& path, const std::string& label,
                     const std::vector<RunRecord>& records);

}  // namespace qbatt
