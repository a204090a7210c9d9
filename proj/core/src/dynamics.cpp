#include "qbatt/dynamics.hpp"

#include "qbatt/errors.hpp"
#include "qbatt/kernel.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace qbatt {

namespace {

namespace odeint = boost::numeric::odeint;

// (E, I): survival amplitude and the auxiliary memory integral.
using SurvivalState = std::array<cplx, 2>;

struct SurvivalRhs {
    double coupling;  // -R^2, or +R^2 under the sign-fault hook
    cplx memory_rate; // -1 + i delta
    double d;
    double Omega;

    void operator()(const SurvivalState& x, SurvivalState& dxdt, double t) const {
        const cplx g = modulation_phase(d, Omega, t);
        dxdt[0] = coupling * g * x[1];
        dxdt[1] = memory_rate * x[1] + std::conj(g) * x[0];
    }
};

// Rank-one Volterra system
//   dy_i/dt = weight * a_i(t) * int_0^t exp(memory_rate (t - t')) sum_j b_j(t') y_j(t') dt'
// which covers both the survival equation (one component) and the general
// two-amplitude system.
struct VolterraSystem {
    std::size_t components{1};
    double weight{-1.0};
    cplx memory_rate{-1.0, 0.0};
    // Writes a_i(t) and b_i(t) for i < components.
    std::function<void(double, cplx*, cplx*)> couplings;
};

// March on a uniform grid t_n = n h, n = 0..steps. Returns y flattened as
// [n * components + i].
std::vector<cplx> march_volterra(const VolterraSystem& sys, const std::vector<cplx>& y0, double h,
                                 std::size_t steps) {
    const std::size_t m = sys.components;
    const std::size_t n_pts = steps + 1;

    std::vector<cplx> a(n_pts * m), b(n_pts * m);
    for (std::size_t n = 0; n < n_pts; ++n) {
        sys.couplings(static_cast<double>(n) * h, &a[n * m], &b[n * m]);
    }
    // Memory table T[k] = exp(rate * k h), each entry evaluated directly.
    std::vector<double> mem_re(n_pts), mem_im(n_pts);
    for (std::size_t k = 0; k < n_pts; ++k) {
        const cplx v = std::exp(sys.memory_rate * (static_cast<double>(k) * h));
        mem_re[k] = v.real();
        mem_im[k] = v.imag();
    }

    std::vector<cplx> y(n_pts * m);
    std::vector<cplx> dy(m, cplx{});  // derivative at the previous node; zero at t = 0
    std::vector<double> src_re(n_pts), src_im(n_pts);

    auto source = [&](std::size_t n, const cplx* yn) {
        cplx s{};
        for (std::size_t i = 0; i < m; ++i) s += b[n * m + i] * yn[i];
        return s;
    };

    std::copy(y0.begin(), y0.end(), y.begin());
    {
        const cplx s0 = source(0, &y[0]);
        src_re[0] = s0.real();
        src_im[0] = s0.imag();
    }

    std::vector<cplx> pred(m), corr(m), dy_new(m);
    for (std::size_t n = 1; n < n_pts; ++n) {
        // Trapezoid weights: h/2 at j = 0 and j = n, h in between. The j = n term
        // depends on the unknown y_n and is added inside the corrector.
        double acc_re = 0.5 * (mem_re[n] * src_re[0] - mem_im[n] * src_im[0]);
        double acc_im = 0.5 * (mem_re[n] * src_im[0] + mem_im[n] * src_re[0]);
        for (std::size_t j = 1; j < n; ++j) {
            const double tr = mem_re[n - j];
            const double ti = mem_im[n - j];
            acc_re += tr * src_re[j] - ti * src_im[j];
            acc_im += tr * src_im[j] + ti * src_re[j];
        }
        const cplx history = h * cplx(acc_re, acc_im);

        const cplx* y_prev = &y[(n - 1) * m];
        const cplx* an = &a[n * m];
        for (std::size_t i = 0; i < m; ++i) pred[i] = y_prev[i] + h * dy[i];

        // Trapezoidal corrector, iterated to its fixed point.
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            const cplx integral = history + 0.5 * h * source(n, pred.data());
            double change = 0.0;
            double scale = 1.0;
            for (std::size_t i = 0; i < m; ++i) {
                dy_new[i] = sys.weight * an[i] * integral;
                corr[i] = y_prev[i] + 0.5 * h * (dy[i] + dy_new[i]);
                change = std::max(change, std::abs(corr[i] - pred[i]));
                scale = std::max(scale, std::abs(corr[i]));
            }
            pred = corr;
            if (change <= 1e-15 * scale) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw SolverError("quadrature corrector did not converge; reduce quadrature_dt",
                              static_cast<double>(n - 1) * h);
        }
        const cplx integral = history + 0.5 * h * source(n, pred.data());
        for (std::size_t i = 0; i < m; ++i) {
            y[n * m + i] = pred[i];
            dy[i] = sys.weight * an[i] * integral;
            if (!std::isfinite(pred[i].real()) || !std::isfinite(pred[i].imag())) {
                throw SolverError("quadrature produced a non-finite amplitude", static_cast<double>(n - 1) * h);
            }
        }
        const cplx sn = source(n, pred.data());
        src_re[n] = sn.real();
        src_im[n] = sn.imag();
    }
    return y;
}

struct QuadratureGrid {
    std::size_t stride;     // coarse steps per output interval
    std::size_t intervals;  // output intervals
};

QuadratureGrid quadrature_grid(const SolverConfig& cfg, std::size_t n_outputs) {
    const double ratio = cfg.dt_out / cfg.quadrature_dt;
    const double stride = std::round(ratio);
    if (stride < 1.0 || std::abs(ratio - stride) > 1e-6 * stride) {
        throw ConfigError("dt_out must be an integer multiple of quadrature_dt");
    }
    return {static_cast<std::size_t>(stride), n_outputs - 1};
}

void check_grid(const SolverConfig& cfg, double R, double Omega, SolverStats& stats) {
    const double limit = max_quadrature_dt(R, Omega);
    if (cfg.quadrature_dt > limit * (1.0 + 1e-12)) {
        const std::string msg = "quadrature_dt = " + std::to_string(cfg.quadrature_dt) +
                                " exceeds 0.01/max(1, R, Omega) = " + std::to_string(limit);
        if (cfg.strict_grid) throw ConfigError(msg);
        stats.warnings.push_back(msg);
    }
}

// Richardson-extrapolated march sampled on the output grid.
std::vector<cplx> solve_on_output_grid(const VolterraSystem& sys, const std::vector<cplx>& y0,
                                       const SolverConfig& cfg, const QuadratureGrid& grid) {
    const std::size_t m = sys.components;
    const double h = cfg.quadrature_dt;
    const std::size_t steps = grid.stride * grid.intervals;
    const auto coarse = march_volterra(sys, y0, h, steps);
    const auto fine = march_volterra(sys, y0, 0.5 * h, 2 * steps);

    std::vector<cplx> out((grid.intervals + 1) * m);
    for (std::size_t k = 0; k <= grid.intervals; ++k) {
        const std::size_t nc = k * grid.stride;
        const std::size_t nf = 2 * nc;
        for (std::size_t i = 0; i < m; ++i) {
            out[k * m + i] = (4.0 * fine[nf * m + i] - coarse[nc * m + i]) / 3.0;
        }
    }
    return out;
}

}  // namespace

double max_quadrature_dt(double R, double Omega) {
    return 0.01 / std::max({1.0, R, Omega});
}

std::pair<cplx, cplx> amplitudes_from_survival(const ModelParams& p, cplx survival) {
    validate(p);
    const double r1 = p.r1;
    const double r2 = p.r2;
    const cplx c1 = (r2 * r2 + r1 * r1 * survival) * p.c01 - r1 * r2 * (1.0 - survival) * p.c02;
    const cplx c2 = -r1 * r2 * (1.0 - survival) * p.c01 + (r1 * r1 + r2 * r2 * survival) * p.c02;
    return {c1, c2};
}

Trajectory solve_survival(const ModelParams& p, const SolverConfig& cfg) {
    validate(p);
    validate(cfg);

    const double rsq = p.R * p.R;
    const SurvivalRhs rhs{cfg.invert_memory_sign ? rsq : -rsq, cplx(-1.0, p.delta), p.d, p.Omega};

    auto stepper = odeint::make_controlled(cfg.abs_tol, cfg.rel_tol,
                                           odeint::runge_kutta_dopri5<SurvivalState>());

    Trajectory traj;
    traj.times = cfg.output_times();
    std::vector<cplx> survival(traj.times.size());
    survival[0] = cplx(1.0, 0.0);

    SurvivalState x{cplx(1.0, 0.0), cplx(0.0, 0.0)};
    double t = 0.0;
    double dt = std::min(cfg.dt_out, 1e-3);
    std::size_t attempts = 0;

    for (std::size_t k = 1; k < traj.times.size(); ++k) {
        const double target = traj.times[k];
        while (t < target) {
            if (attempts >= cfg.max_steps) {
                throw SolverError("step budget of " + std::to_string(cfg.max_steps) + " exhausted", t);
            }
            ++attempts;
            const bool clipped = dt >= target - t;
            double t_try = t;
            double dt_try = clipped ? target - t : dt;
            if (stepper.try_step(rhs, x, t_try, dt_try) == odeint::success) {
                ++traj.stats.accepted_steps;
                t = clipped ? target : t_try;
                dt = clipped ? std::max(dt, dt_try) : dt_try;
                if (!std::isfinite(std::abs(x[0])) || !std::isfinite(std::abs(x[1]))) {
                    throw SolverError("non-finite survival amplitude", t);
                }
            } else {
                ++traj.stats.rejected_steps;
                dt = dt_try;
                if (!(dt > 1e-14 * std::max(1.0, t))) {
                    throw SolverError("step size underflow", t);
                }
            }
        }
        survival[k] = x[0];
    }

    traj.c1.resize(survival.size());
    traj.c2.resize(survival.size());
    for (std::size_t k = 0; k < survival.size(); ++k) {
        std::tie(traj.c1[k], traj.c2[k]) = amplitudes_from_survival(p, survival[k]);
    }
    traj.survival = std::move(survival);
    return traj;
}

Trajectory solve_survival_quadrature(const ModelParams& p, const SolverConfig& cfg) {
    validate(p);
    validate(cfg);

    Trajectory traj;
    traj.times = cfg.output_times();
    check_grid(cfg, p.R, p.Omega, traj.stats);
    const auto grid = quadrature_grid(cfg, traj.times.size());

    VolterraSystem sys;
    sys.components = 1;
    sys.weight = cfg.invert_memory_sign ? p.R * p.R : -p.R * p.R;
    sys.memory_rate = cplx(-1.0, p.delta);
    sys.couplings = [d = p.d, Omega = p.Omega](double t, cplx* a, cplx* b) {
        a[0] = modulation_phase(d, Omega, t);
        b[0] = std::conj(a[0]);
    };

    auto survival = solve_on_output_grid(sys, {cplx(1.0, 0.0)}, cfg, grid);
    traj.stats.accepted_steps = 3 * grid.stride * grid.intervals;

    traj.c1.resize(survival.size());
    traj.c2.resize(survival.size());
    for (std::size_t k = 0; k < survival.size(); ++k) {
        std::tie(traj.c1[k], traj.c2[k]) = amplitudes_from_survival(p, survival[k]);
    }
    traj.survival = std::move(survival);
    return traj;
}

Trajectory solve_general(const GeneralParams& gp, const SolverConfig& cfg, cplx c01, cplx c02) {
    validate(gp);
    validate(cfg);
    if (std::abs(std::norm(c01) + std::norm(c02) - 1.0) > 1e-12) {
        throw ValidationError("|c01|^2 + |c02|^2 must equal 1");
    }

    Trajectory traj;
    traj.times = cfg.output_times();
    check_grid(cfg, gp.R, std::max(gp.A.Omega, gp.B.Omega), traj.stats);
    const auto grid = quadrature_grid(cfg, traj.times.size());

    VolterraSystem sys;
    sys.components = 2;
    sys.weight = cfg.invert_memory_sign ? gp.R * gp.R : -gp.R * gp.R;
    sys.memory_rate = cplx(-1.0, 0.0);
    sys.couplings = [A = gp.A, B = gp.B, r1 = gp.r1(), r2 = gp.r2()](double t, cplx* a, cplx* b) {
        // Each amplitude carries its own qubit's phase exp(i (delta_j t + (d_j/Omega_j) sin Omega_j t)).
        const cplx hA = std::polar(1.0, A.delta * t) * modulation_phase(A.d, A.Omega, t);
        const cplx hB = std::polar(1.0, B.delta * t) * modulation_phase(B.d, B.Omega, t);
        a[0] = r1 * hA;
        a[1] = r2 * hB;
        b[0] = r1 * std::conj(hA);
        b[1] = r2 * std::conj(hB);
    };

    const auto y = solve_on_output_grid(sys, {c01, c02}, cfg, grid);
    traj.stats.accepted_steps = 3 * grid.stride * grid.intervals;
    traj.c1.resize(traj.times.size());
    traj.c2.resize(traj.times.size());
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        traj.c1[k] = y[2 * k];
        traj.c2[k] = y[2 * k + 1];
    }
    return traj;
}

double decoherence_free_check(const ModelParams& p, const SolverConfig& cfg) {
    validate(p);
    const cplx dark1(p.r2, 0.0);
    const cplx dark2(-p.r1, 0.0);
    const auto traj = solve_general(GeneralParams::identical(p), cfg, dark1, dark2);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double dev = std::sqrt(std::norm(traj.c1[k] - dark1) + std::norm(traj.c2[k] - dark2));
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace qbatt
