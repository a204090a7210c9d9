// oracles.hpp: Independent reference computations used by the validation suite

#pragma once

#include "qbatt/ergotropy.hpp"
#include "qbatt/model.hpp"

#include <random>

namespace qbatt::oracle {

// Unmodulated survival amplitude from the Laplace transform of
//   dE/dt = -R^2 int_0^t exp((-1 + i delta)(t - t')) E(t') dt',
// E(t) = exp(-a t/2) [cosh(D t/2) + (a/D) sinh(D t/2)], a = 1 - i delta, D = sqrt(a^2 - 4R^2).
cplx unmodulated_survival(double R, double delta, double t);

// Ergotropy as Tr(H rho) minus the smallest energy over every assignment of the
// state's eigenvalues to the Hamiltonian's levels. Exhaustive, so keep dim small.
double ergotropy_by_permutation(const ergo::QuantumState& state, const ergo::HamiltonianSpec& ham);

// rho = A A^dagger / Tr(A A^dagger) with complex Gaussian A.
ergo::QuantumState random_state(std::mt19937_64& rng, int dim);
ergo::HamiltonianSpec random_hamiltonian(std::mt19937_64& rng, int dim);

}  // namespace qbatt::oracle
