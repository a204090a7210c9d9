#include "qbatt/model.hpp"

#include "qbatt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace qbatt {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kTrajectoryTol = 1e-8;

bool finite(double x) { return std::isfinite(x); }

std::string short_form(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

void validate(const ModelParams& p) {
    if (!(finite(p.R) && p.R > 0.0)) throw ConfigError("R must be finite and > 0");
    if (!finite(p.delta)) throw ConfigError("delta must be finite");
    if (!(finite(p.d) && p.d >= 0.0)) throw ConfigError("d must be finite and >= 0");
    if (!(finite(p.Omega) && p.Omega >= 0.0)) throw ConfigError("Omega must be finite and >= 0");
    if (p.Omega == 0.0 && p.d != 0.0) {
        throw ConfigError("Omega = 0 with d != 0 is not allowed; express modulation-off as d = 0");
    }
    if (!(p.r1 >= 0.0 && p.r1 <= 1.0 && p.r2 >= 0.0 && p.r2 <= 1.0)) {
        throw ValidationError("r1, r2 must lie in [0, 1]");
    }
    if (std::abs(p.r1 * p.r1 + p.r2 * p.r2 - 1.0) > kNormTol) {
        throw ValidationError("r1^2 + r2^2 must equal 1");
    }
    if (std::abs(std::norm(p.c01) + std::norm(p.c02) - 1.0) > kNormTol) {
        throw ValidationError("|c01|^2 + |c02|^2 must equal 1");
    }
    if (!(finite(p.omega0) && p.omega0 > 0.0)) throw ConfigError("omega0 must be finite and > 0");
}

double GeneralParams::r1() const { return mu1 / std::hypot(mu1, mu2); }
double GeneralParams::r2() const { return mu2 / std::hypot(mu1, mu2); }

GeneralParams GeneralParams::identical(const ModelParams& p) {
    GeneralParams g;
    g.A = QubitDrive{p.delta, p.d, p.Omega};
    g.B = g.A;
    g.mu1 = p.r1;
    g.mu2 = p.r2;
    g.R = p.R;
    return g;
}

void validate(const GeneralParams& p) {
    if (!(finite(p.R) && p.R > 0.0)) throw ConfigError("R must be finite and > 0");
    for (const QubitDrive* q : {&p.A, &p.B}) {
        if (!(finite(q->delta) && finite(q->d) && finite(q->Omega))) {
            throw ConfigError("qubit drive parameters must be finite");
        }
        if (q->d < 0.0 || q->Omega < 0.0) throw ConfigError("d and Omega must be >= 0");
        if (q->Omega == 0.0 && q->d != 0.0) {
            throw ConfigError("Omega = 0 with d != 0 is not allowed");
        }
    }
    if (!(finite(p.mu1) && finite(p.mu2) && p.mu1 >= 0.0 && p.mu2 >= 0.0) ||
        std::hypot(p.mu1, p.mu2) == 0.0) {
        throw ValidationError("mu1, mu2 must be >= 0 and not both zero");
    }
}

std::vector<double> SolverConfig::output_times() const {
    const auto n = static_cast<std::size_t>(std::floor(t_max / dt_out + 1e-9));
    std::vector<double> times(n + 1);
    for (std::size_t k = 0; k <= n; ++k) times[k] = static_cast<double>(k) * dt_out;
    return times;
}

void validate(const SolverConfig& cfg) {
    if (!(finite(cfg.t_max) && cfg.t_max > 0.0)) throw ConfigError("t_max must be > 0");
    if (!(finite(cfg.dt_out) && cfg.dt_out > 0.0 && cfg.dt_out <= cfg.t_max)) {
        throw ConfigError("dt_out must satisfy 0 < dt_out <= t_max");
    }
    for (double tol : {cfg.rel_tol, cfg.abs_tol}) {
        if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("tolerances must lie in (0, 1e-2]");
    }
    if (!(finite(cfg.quadrature_dt) && cfg.quadrature_dt > 0.0)) {
        throw ConfigError("quadrature_dt must be > 0");
    }
    if (cfg.max_steps == 0) throw ConfigError("max_steps must be > 0");
}

TrajectoryCheck check_trajectory(const Trajectory& traj) {
    TrajectoryCheck out;
    if (traj.survival) {
        const auto& e = *traj.survival;
        if (e.empty() || e.front() != cplx(1.0, 0.0)) {
            out.ok = false;
            out.detail = "E(0) != 1";
        }
        for (const cplx& v : e) {
            const double a = std::abs(v);
            out.max_abs_survival = std::isfinite(a) ? std::max(out.max_abs_survival, a)
                                                    : std::numeric_limits<double>::infinity();
        }
        if (!(out.max_abs_survival <= 1.0 + kTrajectoryTol)) {
            out.ok = false;
            out.detail = "|E| > 1 (max |E| = " + short_form(out.max_abs_survival) + ")";
        }
    }
    for (std::size_t k = 0; k < traj.c1.size(); ++k) {
        const double n = std::norm(traj.c1[k]) + std::norm(traj.c2[k]);
        out.max_norm = std::isfinite(n) ? std::max(out.max_norm, n) : std::numeric_limits<double>::infinity();
    }
    if (!(out.max_norm <= 1.0 + kTrajectoryTol)) {
        out.ok = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += "|c1|^2 + |c2|^2 > 1 (max = " + short_form(out.max_norm) + ")";
    }
    return out;
}

}  // namespace qbatt
