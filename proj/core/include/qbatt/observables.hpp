// observables.hpp: Per-time-point battery observables derived from trajectories

#pragma once

#include "qbatt/ergotropy.hpp"
#include "qbatt/model.hpp"

#include <utility>
#include <vector>

namespace qbatt {

inline constexpr double kDefaultSettleBand = 1e-2;

// Per-time-point outputs. Energies are dimensionless: dE_B in units of omega0,
// W_ratio in units of W_max = omega0.
struct ObservableSeries {
    std::vector<double> times;
    std::vector<double> p_e_A;  // |c1|^2
    std::vector<double> p_e_B;  // |c2|^2
    std::vector<double> dE_B;   // p_e_B[k] - p_e_B[0]
    std::vector<double> W_ratio;  // max(0, 2 p_e_B - 1)

    std::size_t size() const noexcept { return times.size(); }
};

struct ChargingSummary {
    double max_dE_B{0.0};
    double t_at_max{0.0};
    double max_W_ratio{0.0};
    double settle_time{0.0};
    double terminal_dE_B{0.0};
};

// (rho_A, rho_B) = (diag(1 - |c1|^2, |c1|^2), diag(1 - |c2|^2, |c2|^2)) in (|g>, |e>) order.
std::pair<ergo::QuantumState, ergo::QuantumState> reduced_states(cplx c1, cplx c2);

ObservableSeries observable_series(const Trajectory& traj);

// settle_time is the earliest grid time after which |dE_B - terminal| < settle_band
// holds up to the end of the series; t_at_max is the earliest maximizer.
ChargingSummary summarize(const ObservableSeries& series, double settle_band = kDefaultSettleBand);

}  // namespace qbatt
