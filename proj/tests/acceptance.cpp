// Acceptance suite: one PASS/FAIL line per criterion.
//
//   qbatt_acceptance                 run all criteria
//   qbatt_acceptance --criterion N   run criterion N only; exit status 0 iff it passes

#include "qbatt/dynamics.hpp"
#include "qbatt/ergotropy.hpp"
#include "qbatt/errors.hpp"
#include "qbatt/kernel.hpp"
#include "qbatt/observables.hpp"

#include "reference.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace qbatt;

namespace {

struct Outcome {
    bool passed{false};
    std::string measured;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

ModelParams point(double R, double d, double Omega, double delta = 0.0) {
    ModelParams p;
    p.R = R;
    p.delta = delta;
    p.d = d;
    p.Omega = Omega;
    return p;
}

SolverConfig horizon(double t_max) {
    SolverConfig cfg;
    cfg.t_max = t_max;
    return cfg;
}

ChargingSummary summary_for(const ModelParams& p, double t_max) {
    return summarize(observable_series(solve_survival(p, horizon(t_max))), 1e-2);
}

Outcome analytic_limit() {
    double worst = 0.0;
    const SolverConfig cfg = horizon(20.0);
    for (double R : {0.1, 1.0, 5.0}) {
        for (double delta : {0.0, 1.0, -1.0, 5.0, -5.0}) {
            const Trajectory traj = solve_survival(point(R, 0.0, 0.0, delta), cfg);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                const cplx exact = testref::survival_by_residues(R, delta, traj.times[k]);
                worst = std::max(worst, std::abs((*traj.survival)[k] - exact));
            }
        }
    }
    return {worst <= 1e-8, fmt("sup|E - E_closed| = %.3g (tol 1e-8)", worst)};
}

Outcome dual_solver() {
    double worst = 0.0;
    const SolverConfig cfg = horizon(20.0);
    for (double Omega : {0.5, 1.0, 5.0, 10.0}) {
        const ModelParams p = point(5.0, 10.0, Omega);
        const Trajectory rk = solve_survival(p, cfg);
        const Trajectory quad = solve_survival_quadrature(p, cfg);
        for (std::size_t k = 0; k < rk.size(); ++k) {
            worst = std::max(worst, std::abs((*rk.survival)[k] - (*quad.survival)[k]));
        }
    }
    return {worst <= 1e-6, fmt("sup|E_ode - E_quadrature| = %.3g (tol 1e-6)", worst)};
}

Outcome reduction_consistency() {
    double worst = 0.0;
    const SolverConfig cfg = horizon(20.0);
    for (double Omega : {0.5, 1.0, 5.0, 10.0}) {
        const ModelParams p = point(5.0, 10.0, Omega);
        const Trajectory reduced = solve_survival(p, cfg);
        const Trajectory general = solve_general(GeneralParams::identical(p), cfg, p.c01, p.c02);
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const auto [c1, c2] = amplitudes_from_survival(p, (*reduced.survival)[k]);
            worst = std::max({worst, std::abs(c1 - general.c1[k]), std::abs(c2 - general.c2[k])});
        }
    }
    return {worst <= 1e-5, fmt("sup|c_general - c_reduced| = %.3g (tol 1e-5)", worst)};
}

Outcome weak_coupling_steady_state() {
    const ObservableSeries s = observable_series(solve_survival(point(0.1, 0.0, 0.0), horizon(100.0)));
    double max_w = 0.0;
    for (double w : s.W_ratio) max_w = std::max(max_w, w);
    const double terminal = s.dE_B.back();
    const bool ok = std::abs(terminal - 0.25) <= 1e-3 && max_w == 0.0;
    return {ok, fmt("dE_B(100) = %.6f (want 0.25 +- 1e-3), max W/Wmax = %.3g (want 0)", terminal, max_w)};
}

Outcome strong_coupling_settling() {
    const double settle = summary_for(point(5.0, 0.0, 0.0), 20.0).settle_time;
    return {settle <= 12.0, fmt("settle_time = %.4g (want <= 12)", settle)};
}

Outcome low_frequency_prolongation() {
    const double modulated = summary_for(point(5.0, 10.0, 0.5), 20.0).settle_time;
    const double plain = summary_for(point(5.0, 0.0, 0.0), 20.0).settle_time;
    return {modulated > plain, fmt("settle_time Omega=0.5: %.4g, unmodulated: %.4g (want first > second)",
                                   modulated, plain)};
}

Outcome high_frequency_suppression() {
    const double fast = summary_for(point(5.0, 10.0, 10.0), 20.0).max_dE_B;
    const double slow = summary_for(point(5.0, 10.0, 0.5), 20.0).max_dE_B;
    return {fast < slow, fmt("max dE_B Omega=10: %.6f, Omega=0.5: %.6f (want first < second)", fast, slow)};
}

Outcome amplitude_enhancement() {
    std::vector<double> w;
    for (double d : {10.0, 20.0, 40.0}) w.push_back(summary_for(point(5.0, d, 0.5), 20.0).max_W_ratio);
    const bool ok = w[0] <= w[1] && w[1] <= w[2];
    return {ok, fmt("max W/Wmax at d=10,20,40: %.6f, %.6f, %.6f (want non-decreasing)", w[0], w[1], w[2])};
}

Outcome weak_coupling_modulated_work() {
    double best = 0.0;
    for (double Omega : {0.01, 0.05, 0.1}) {
        best = std::max(best, summary_for(point(0.1, 10.0, Omega), 100.0).max_W_ratio);
    }
    const ObservableSeries plain = observable_series(solve_survival(point(0.1, 0.0, 0.0), horizon(100.0)));
    double plain_max = 0.0;
    for (double x : plain.W_ratio) plain_max = std::max(plain_max, x);
    const bool ok = best > 0.0 && plain_max == 0.0;
    return {ok, fmt("max W/Wmax modulated: %.6g (want > 0), unmodulated: %.3g (want 0)", best, plain_max)};
}

Outcome bessel_zero_decoupling() {
    const auto max_pop = [](const ModelParams& p) {
        double m = 0.0;
        for (double x : observable_series(solve_survival(p, horizon(20.0))).p_e_B) m = std::max(m, x);
        return m;
    };
    const double at_zero = max_pop(point(5.0, 2.404826 * 20.0, 20.0));
    const double plain = max_pop(point(5.0, 0.0, 0.0));
    return {at_zero < plain, fmt("max |c2|^2 at J0 zero: %.6f, unmodulated: %.6f (want first < second)", at_zero,
                                 plain)};
}

Outcome ergotropy_oracle() {
    std::mt19937_64 rng(1234567);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<int> dims(2, 5);
    double worst = 0.0, worst_fixed = 0.0, most_negative = 0.0;
    for (int sample = 0; sample < 1000; ++sample) {
        const int n = dims(rng);
        Eigen::MatrixXcd a(n, n), h(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                a(i, j) = cplx(gauss(rng), gauss(rng));
                h(i, j) = cplx(gauss(rng), gauss(rng));
            }
        }
        Eigen::MatrixXcd rho = a * a.adjoint();
        rho /= rho.trace().real();
        h = 0.5 * (h + h.adjoint()).eval();

        const ergo::QuantumState state(rho);
        const ergo::HamiltonianSpec ham(h);
        const ergo::ErgotropyResult res = ergo::ergotropy(state, ham);
        const double brute = (h * rho).trace().real() - testref::min_energy_over_permutations(rho, h);
        worst = std::max(worst, std::abs(res.ergotropy - brute));
        most_negative = std::min(most_negative, res.ergotropy);
        worst_fixed = std::max(worst_fixed, std::abs(ergo::ergotropy(res.passive_state, ham).ergotropy));
    }
    const bool ok = worst <= 1e-10 && worst_fixed <= 1e-10 && most_negative >= -1e-12;
    return {ok, fmt("max |W - W_brute| = %.3g, max W(passive) = %.3g, min W = %.3g (tol 1e-10)", worst, worst_fixed,
                    most_negative)};
}

Outcome jacobi_anger_truncation() {
    double worst = 0.0;
    for (double z : {0.5, 1.0, 2.404826, 5.0, 7.5, 10.0}) {
        for (double Omega : {0.5, 1.0, 10.0}) {
            const double period = 2.0 * std::numbers::pi / Omega;
            for (int k = 0; k <= 1000; ++k) {
                const double t = period * k / 1000.0;
                const cplx exact = std::exp(cplx(0.0, z * std::sin(Omega * t)));
                worst = std::max(worst, std::abs(jacobi_anger_phase(z, Omega, t, 40) - exact));
            }
        }
    }
    return {worst <= 1e-10, fmt("sup|series - exact| = %.3g (tol 1e-10)", worst)};
}

Outcome decoherence_free_state() {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> angle(0.05, 0.5 * std::numbers::pi - 0.05);
    std::uniform_real_distribution<double> coupling(0.1, 5.0);
    std::uniform_real_distribution<double> detuning(-2.0, 2.0);
    std::uniform_real_distribution<double> amp(0.0, 10.0);
    std::uniform_real_distribution<double> freq(0.5, 10.0);
    double worst = 0.0;
    for (int draw = 0; draw < 5; ++draw) {
        const double theta = angle(rng);
        ModelParams p = point(coupling(rng), amp(rng), freq(rng), detuning(rng));
        p.r1 = std::cos(theta);
        p.r2 = std::sin(theta);
        worst = std::max(worst, decoherence_free_check(p, horizon(20.0)));
    }
    return {worst <= 1e-6, fmt("max |C - C(0)| = %.3g (tol 1e-6)", worst)};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"analytic-limit fidelity", analytic_limit},
        {"dual-solver equivalence", dual_solver},
        {"reduction consistency", reduction_consistency},
        {"weak-coupling steady state", weak_coupling_steady_state},
        {"strong-coupling settling", strong_coupling_settling},
        {"low-frequency prolongation", low_frequency_prolongation},
        {"high-frequency suppression", high_frequency_suppression},
        {"amplitude enhancement", amplitude_enhancement},
        {"weak-coupling modulation-enabled work", weak_coupling_modulated_work},
        {"Bessel-zero decoupling", bessel_zero_decoupling},
        {"ergotropy oracle", ergotropy_oracle},
        {"Jacobi-Anger truncation", jacobi_anger_truncation},
        {"decoherence-free state", decoherence_free_state},
    };
    return all;
}

bool run_one(std::size_t index) {
    const Criterion& c = criteria()[index - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = c.run();
    } catch (const Error& e) {
        out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %-38s %s [%.1fs]\n", index, out.passed ? "PASS" : "FAIL", c.name,
                out.measured.c_str(), secs);
    std::fflush(stdout);
    return out.passed;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t count = criteria().size();
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        const long n = std::strtol(argv[2], nullptr, 10);
        if (n < 1 || static_cast<std::size_t>(n) > count) {
            std::fprintf(stderr, "criterion must be in 1..%zu\n", count);
            return 2;
        }
        return run_one(static_cast<std::size_t>(n)) ? 0 : 1;
    }
    if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    std::size_t passed = 0;
    for (std::size_t i = 1; i <= count; ++i) passed += run_one(i) ? 1 : 0;
    std::printf("%zu/%zu criteria passed\n", passed, count);
    return passed == count ? 0 : 1;
}
