#include "qbatt/observables.hpp"

#include "qbatt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qbatt {

namespace {

// |c|^2 may exceed 1 by solver roundoff (bounded by the trajectory invariant).
double population(cplx c) { return std::min(1.0, std::norm(c)); }

}  // namespace

std::pair<ergo::QuantumState, ergo::QuantumState> reduced_states(cplx c1, cplx c2) {
    const double total = std::norm(c1) + std::norm(c2);
    if (!(total <= 1.0 + 1e-8)) {
        throw ValidationError("reduced_states: |c1|^2 + |c2|^2 = " + std::to_string(total) + " > 1");
    }
    const double pa = population(c1);
    const double pb = population(c2);
    Eigen::Vector2d rho_a(1.0 - pa, pa);
    Eigen::Vector2d rho_b(1.0 - pb, pb);
    return {ergo::QuantumState::diagonal(rho_a), ergo::QuantumState::diagonal(rho_b)};
}

ObservableSeries observable_series(const Trajectory& traj) {
    ObservableSeries s;
    const std::size_t n = traj.size();
    s.times = traj.times;
    s.p_e_A.resize(n);
    s.p_e_B.resize(n);
    s.dE_B.resize(n);
    s.W_ratio.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.p_e_A[k] = population(traj.c1[k]);
        s.p_e_B[k] = population(traj.c2[k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        s.dE_B[k] = s.p_e_B[k] - s.p_e_B[0];
        s.W_ratio[k] = std::max(0.0, 2.0 * s.p_e_B[k] - 1.0);
    }
    return s;
}

ChargingSummary summarize(const ObservableSeries& series, double settle_band) {
    if (series.size() == 0) throw ArgumentError("summarize: empty series");
    if (!(settle_band > 0.0)) throw ArgumentError("summarize: settle_band must be > 0");

    ChargingSummary out;
    const auto max_it = std::max_element(series.dE_B.begin(), series.dE_B.end());
    const auto imax = static_cast<std::size_t>(max_it - series.dE_B.begin());
    out.max_dE_B = *max_it;
    out.t_at_max = series.times[imax];
    out.max_W_ratio = *std::max_element(series.W_ratio.begin(), series.W_ratio.end());
    out.terminal_dE_B = series.dE_B.back();

    // Last grid point outside the band; the series has settled from the next one on.
    std::size_t settled_from = 0;
    for (std::size_t k = series.size(); k-- > 0;) {
        if (!(std::abs(series.dE_B[k] - out.terminal_dE_B) < settle_band)) {
            settled_from = k + 1;
            break;
        }
    }
    out.settle_time = series.times[std::min(settled_from, series.size() - 1)];
    return out;
}

}  // namespace qbatt
