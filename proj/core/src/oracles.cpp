#include "qbatt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace qbatt::oracle {

cplx unmodulated_survival(double R, double delta, double t) {
    const cplx a(1.0, -delta);
    const cplx D = std::sqrt(a * a - 4.0 * R * R);
    const cplx decay = std::exp(-0.5 * a * t);
    // sinh(Dt/2)/D -> t/2 as D -> 0 (critical damping).
    const cplx sinh_over_D = std::abs(D) < 1e-8 ? cplx(0.5 * t) : std::sinh(0.5 * D * t) / D;
    return decay * (std::cosh(0.5 * D * t) + a * sinh_over_D);
}

double ergotropy_by_permutation(const ergo::QuantumState& state, const ergo::HamiltonianSpec& ham) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rho_eig(state.matrix(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ham_eig(ham.matrix(), Eigen::EigenvaluesOnly);
    const auto n = static_cast<std::size_t>(state.dim());

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double energy = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            energy += rho_eig.eigenvalues()(static_cast<Eigen::Index>(k)) *
                      ham_eig.eigenvalues()(static_cast<Eigen::Index>(perm[k]));
        }
        best = std::min(best, energy);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double initial = (ham.matrix() * state.matrix()).trace().real();
    return initial - best;
}

namespace {

Eigen::MatrixXcd gaussian_matrix(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = cplx(re, im);
        }
    }
    return m;
}

}  // namespace

ergo::QuantumState random_state(std::mt19937_64& rng, int dim) {
    const Eigen::MatrixXcd a = gaussian_matrix(rng, dim);
    Eigen::MatrixXcd rho = a * a.adjoint();
    rho /= rho.trace().real();
    return ergo::QuantumState(0.5 * (rho + rho.adjoint()));
}

ergo::HamiltonianSpec random_hamiltonian(std::mt19937_64& rng, int dim) {
    const Eigen::MatrixXcd b = gaussian_matrix(rng, dim);
    return ergo::HamiltonianSpec(0.5 * (b + b.adjoint()));
}

}  // namespace qbatt::oracle
