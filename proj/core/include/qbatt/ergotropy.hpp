// ergotropy.hpp: Passive states and ergotropy for finite-dimensional quantum systems

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace qbatt::ergo {

// Elementwise tolerance for the density-operator invariant checks.
inline constexpr double kInvariantTol = 1e-12;

// Density operator. Construction checks that the input is a valid state
// and stores the Hermitized matrix (M + M^dagger)/2.
class QuantumState {
public:
    explicit QuantumState(const Eigen::MatrixXcd& matrix);

    static QuantumState diagonal(const Eigen::VectorXd& populations);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

private:
    Eigen::MatrixXcd matrix_;
};

// Hermitian energy operator; the energy unit is the caller's choice.
class HamiltonianSpec {
public:
    explicit HamiltonianSpec(const Eigen::MatrixXcd& matrix);

    // (omega0 / 2) sigma_z with |g> first: E(|g>) = -omega0/2, E(|e>) = +omega0/2.
    static HamiltonianSpec qubit(double omega0);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

private:
    Eigen::MatrixXcd matrix_;
};

struct ErgotropyResult {
    double ergotropy{0.0};
    QuantumState passive_state;
    double initial_energy{0.0};
    double passive_energy{0.0};
    // Same quantity from the double sum over eigenvector overlaps; kept for cross-checks.
    double ergotropy_overlap_sum{0.0};
};

struct SpectralPair {
    double value;
    Eigen::VectorXcd vector;
};

// Eigenpairs of the state, populations non-increasing. Ties keep solver order.
std::vector<SpectralPair> spectral_sort(const QuantumState& state);

// Populations of `state` reassigned in descending order to the energy levels of
// `ham` in ascending order.
QuantumState passive_state(const QuantumState& state, const HamiltonianSpec& ham);

// Maximum work extractable by a cyclic unitary. Evaluated both as
// Tr(H rho) - Tr(H sigma) and as sum_{mn} r_n e_m (|<r_n|e_m>|^2 - delta_mn);
// throws ValidationError if the two disagree by more than 1e-10.
ErgotropyResult ergotropy(const QuantumState& state, const HamiltonianSpec& ham);

// Closed form for a qubit diagonal in the energy basis, in units of W_max = omega0:
// (2 p_e - 1) Theta(p_e - 1/2) == max(0, 2 p_e - 1).
double ergotropy_qubit_diagonal(double p_excited);

}  // namespace qbatt::ergo
