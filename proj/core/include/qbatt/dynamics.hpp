// dynamics.hpp: Solvers for the survival amplitude and the two-amplitude Volterra system

#pragma once

#include "qbatt/model.hpp"

#include <utility>

namespace qbatt {

// Production solver. Integrates dE/dt = -R^2 * int_0^t F(t,t') E(t') dt' through
// its exact separable reduction
//   dE/dt = -R^2 g(t) I,   dI/dt = (-1 + i delta) I + conj(g(t)) E,
// E(0) = 1, I(0) = 0, with an adaptive Dormand-Prince 5(4) pair. Fills c1, c2.
// Throws SolverError if the step budget runs out.
Trajectory solve_survival(const ModelParams& p, const SolverConfig& cfg);

// Oracle solver for the same equation: marches E on a uniform grid of step
// quadrature_dt, composite trapezoidal memory integral, trapezoidal
// predictor-corrector; Richardson-extrapolated from steps h and h/2.
Trajectory solve_survival_quadrature(const ModelParams& p, const SolverConfig& cfg);

// Direct Volterra quadrature for non-identical qubits (same scheme as the
// survival oracle). `survival` is left empty.
Trajectory solve_general(const GeneralParams& gp, const SolverConfig& cfg, cplx c01, cplx c02);

// c1 = [r2^2 + r1^2 E] c01 - r1 r2 [1 - E] c02
// c2 = -r1 r2 [1 - E] c01 + [r1^2 + r2^2 E] c02
std::pair<cplx, cplx> amplitudes_from_survival(const ModelParams& p, cplx survival);

// Runs solve_general from the dark state (r2, -r1) and returns the largest
// deviation |(C1, C2) - (r2, -r1)| over the output grid.
double decoherence_free_check(const ModelParams& p, const SolverConfig& cfg);

// Largest grid step the quadrature oracle accepts without a warning:
// 0.01 / max(1, R, Omega).
double max_quadrature_dt(double R, double Omega);

}  // namespace qbatt
