// model.hpp: Parameter and trajectory types for the battery-charger model
//
// All rates and times are in units of the cavity loss rate lambda; the time axis
// of every trajectory is lambda*t.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qbatt {

using cplx = std::complex<double>;

// Identical-qubit model: charger A and battery B share detuning and modulation.
struct ModelParams {
    double R{5.0};        // collective vacuum Rabi frequency R = mu_T * W
    double delta{0.0};    // qubit-cavity detuning omega0 - omega_c
    double d{0.0};        // modulation amplitude
    double Omega{0.0};    // modulation frequency; 0 only when d == 0
    double r1{0.7071067811865476};  // relative coupling of the charger
    double r2{0.7071067811865476};  // relative coupling of the battery
    cplx c01{1.0, 0.0};   // initial amplitude of |e_A, g_B>
    cplx c02{0.0, 0.0};   // initial amplitude of |g_A, e_B>
    double omega0{1.0};   // qubit transition frequency, used only for absolute energies

    bool modulated() const noexcept { return d != 0.0; }
};

// Throws ConfigError / ValidationError if any invariant fails.
void validate(const ModelParams& p);

struct QubitDrive {
    double delta{0.0};  // omega_j - omega_c
    double d{0.0};
    double Omega{0.0};
};

// Non-identical qubits. mu1, mu2 are normalized internally to r_i = mu_i / mu_T.
struct GeneralParams {
    QubitDrive A;  // charger, amplitude C1
    QubitDrive B;  // battery, amplitude C2
    double mu1{1.0};
    double mu2{1.0};
    double R{5.0};

    double delta_AB() const noexcept { return A.delta - B.delta; }
    double r1() const;
    double r2() const;

    static GeneralParams identical(const ModelParams& p);
};

void validate(const GeneralParams& p);

struct SolverConfig {
    double t_max{20.0};
    double dt_out{0.01};
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    double quadrature_dt{1e-3};
    // Accepted + rejected step budget for the adaptive integrator.
    std::size_t max_steps{20'000'000};
    // Escalates the quadrature coarse-grid warning to a ConfigError.
    bool strict_grid{false};
    // Fault-injection hook: integrates dE/dt = +R^2 * integral instead of -R^2.
    bool invert_memory_sign{false};

    // Output grid 0, dt_out, 2*dt_out, ... up to t_max.
    std::vector<double> output_times() const;
};

void validate(const SolverConfig& cfg);

struct SolverStats {
    std::size_t accepted_steps{0};
    std::size_t rejected_steps{0};
    std::vector<std::string> warnings;
};

struct Trajectory {
    std::vector<double> times;
    // Survival amplitude E(t); empty optional when the trajectory comes from the
    // general (non-identical) solver, where E is undefined.
    std::optional<std::vector<cplx>> survival;
    std::vector<cplx> c1;
    std::vector<cplx> c2;
    SolverStats stats;

    std::size_t size() const noexcept { return times.size(); }
};

struct TrajectoryCheck {
    double max_abs_survival{0.0};
    double max_norm{0.0};
    bool ok{true};
    std::string detail;
};

// Checks E(0) = 1, |E| <= 1 + 1e-8 and |c1|^2 + |c2|^2 <= 1 + 1e-8.
TrajectoryCheck check_trajectory(const Trajectory& traj);

}  // namespace qbatt
