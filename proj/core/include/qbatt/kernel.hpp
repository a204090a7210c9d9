// kernel.hpp: Modulated Lorentzian memory kernel and its Bessel sideband expansion

#pragma once

#include "qbatt/model.hpp"

namespace qbatt {

// g(t) = exp(i (d/Omega) sin(Omega t)); identically 1 when d == 0.
// Throws ConfigError for Omega == 0 with d != 0.
cplx modulation_phase(double d, double Omega, double t);

// W^2-normalized memory kernel
//   exp((-1 + i delta)(t - t')) * exp(i (d/Omega)(sin(Omega t) - sin(Omega t')))
// The solvers multiply it by R^2.
cplx kernel(const ModelParams& p, double t, double t_prime);

// n-th sideband weight J_n(d/Omega) of the modulation phase.
double jacobi_anger_coefficient(int n, double d_over_Omega);

// Truncated Jacobi-Anger series of exp(i z sin(Omega t)), z = d/Omega:
//   J_0(z) + 2 sum_{n=1}^{n_terms} J_n(z) [cos(n theta) if n even, i sin(n theta) if n odd]
// with theta = Omega t. Validation oracle only.
cplx jacobi_anger_phase(double d_over_Omega, double Omega, double t, int n_terms);

}  // namespace qbatt
