#include "qbatt/ergotropy.hpp"

#include "qbatt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qbatt::ergo {

namespace {

Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError(std::string(what) + ": matrix must be square and non-empty");
    }
    const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(skew <= kInvariantTol)) {
        throw ValidationError(std::string(what) + ": matrix is not Hermitian (max |M - M^dagger| = " +
                              std::to_string(skew) + ")");
    }
    return 0.5 * (m + m.adjoint());
}

void require_same_dim(const QuantumState& state, const HamiltonianSpec& ham) {
    if (state.dim() != ham.dim()) {
        throw ArgumentError("dimension mismatch: state is " + std::to_string(state.dim()) +
                            ", Hamiltonian is " + std::to_string(ham.dim()));
    }
}

// Eigenpairs of a Hermitian matrix; `descending` picks the order. Stable on ties.
std::vector<SpectralPair> sorted_eigenpairs(const Eigen::MatrixXcd& m, bool descending) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed");
    }
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<SpectralPair> pairs;
    pairs.reserve(n);
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
        pairs.push_back({solver.eigenvalues()(k), solver.eigenvectors().col(k)});
    }
    if (descending) {
        std::stable_sort(pairs.begin(), pairs.end(),
                         [](const SpectralPair& a, const SpectralPair& b) { return a.value > b.value; });
    } else {
        std::stable_sort(pairs.begin(), pairs.end(),
                         [](const SpectralPair& a, const SpectralPair& b) { return a.value < b.value; });
    }
    return pairs;
}

}  // namespace

QuantumState::QuantumState(const Eigen::MatrixXcd& matrix) : matrix_(hermitized(matrix, "QuantumState")) {
    const double trace_err = std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0));
    if (!(trace_err <= kInvariantTol)) {
        throw ValidationError("QuantumState: |Tr rho - 1| = " + std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kInvariantTol) {
        throw ValidationError("QuantumState: negative eigenvalue " + std::to_string(min_eig));
    }
}

QuantumState QuantumState::diagonal(const Eigen::VectorXd& populations) {
    return QuantumState(populations.cast<std::complex<double>>().asDiagonal().toDenseMatrix());
}

HamiltonianSpec::HamiltonianSpec(const Eigen::MatrixXcd& matrix)
    : matrix_(hermitized(matrix, "HamiltonianSpec")) {}

HamiltonianSpec HamiltonianSpec::qubit(double omega0) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 0) = -0.5 * omega0;
    h(1, 1) = 0.5 * omega0;
    return HamiltonianSpec(h);
}

std::vector<SpectralPair> spectral_sort(const QuantumState& state) {
    return sorted_eigenpairs(state.matrix(), /*descending=*/true);
}

QuantumState passive_state(const QuantumState& state, const HamiltonianSpec& ham) {
    require_same_dim(state, ham);
    const auto populations = spectral_sort(state);
    const auto levels = sorted_eigenpairs(ham.matrix(), /*descending=*/false);

    const auto n = static_cast<Eigen::Index>(state.dim());
    Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t k = 0; k < populations.size(); ++k) {
        // Clamp tiny negative eigenvalues from roundoff.
        const double r = std::max(0.0, populations[k].value);
        sigma += r * levels[k].vector * levels[k].vector.adjoint();
    }
    // Renormalize the trace after clamping.
    sigma /= sigma.trace().real();
    return QuantumState(sigma);
}

ErgotropyResult ergotropy(const QuantumState& state, const HamiltonianSpec& ham) {
    require_same_dim(state, ham);
    const auto populations = spectral_sort(state);
    const auto levels = sorted_eigenpairs(ham.matrix(), /*descending=*/false);

    QuantumState sigma = passive_state(state, ham);
    const double initial = (ham.matrix() * state.matrix()).trace().real();
    const double passive = (ham.matrix() * sigma.matrix()).trace().real();

    double overlap_sum = 0.0;
    for (std::size_t n = 0; n < populations.size(); ++n) {
        for (std::size_t m = 0; m < levels.size(); ++m) {
            const double overlap = std::norm(populations[n].vector.dot(levels[m].vector));
            overlap_sum += populations[n].value * levels[m].value * (overlap - (m == n ? 1.0 : 0.0));
        }
    }

    const double work = initial - passive;
    const double scale = std::max(1.0, ham.matrix().cwiseAbs().maxCoeff());
    if (std::abs(work - overlap_sum) > 1e-10 * scale) {
        throw ValidationError("ergotropy: trace and overlap-sum evaluations disagree (" +
                              std::to_string(work) + " vs " + std::to_string(overlap_sum) + ")");
    }

    // Roundoff can leave -1e-16 for passive inputs; the invariant band is 1e-12.
    const double clamped = (work < 0.0 && work > -kInvariantTol * scale) ? 0.0 : work;
    return ErgotropyResult{clamped, std::move(sigma), initial, initial - clamped, overlap_sum};
}

double ergotropy_qubit_diagonal(double p_excited) {
    if (!(p_excited >= 0.0 && p_excited <= 1.0)) {
        throw ArgumentError("ergotropy_qubit_diagonal: p_e must lie in [0, 1], got " +
                            std::to_string(p_excited));
    }
    return std::max(0.0, 2.0 * p_excited - 1.0);
}

}  // namespace qbatt::ergo
