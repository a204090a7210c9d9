#include "qbatt/kernel.hpp"

#include "qbatt/errors.hpp"

#include <cmath>

namespace qbatt {

cplx modulation_phase(double d, double Omega, double t) {
    if (d == 0.0) return {1.0, 0.0};
    if (Omega == 0.0) throw ConfigError("modulation with d != 0 requires Omega > 0");
    return std::polar(1.0, (d / Omega) * std::sin(Omega * t));
}

cplx kernel(const ModelParams& p, double t, double t_prime) {
    if (!(t >= t_prime)) throw ArgumentError("kernel: requires t >= t'");
    if (t_prime < 0.0) throw ArgumentError("kernel: requires t' >= 0");
    const double tau = t - t_prime;
    const cplx memory = std::exp(cplx(-1.0, p.delta) * tau);
    if (p.d == 0.0) return memory;
    if (p.Omega == 0.0) throw ConfigError("modulation with d != 0 requires Omega > 0");
    // One phase difference instead of g(t) * conj(g(t')) keeps the t = t' case exactly 1.
    const double phase = (p.d / p.Omega) * (std::sin(p.Omega * t) - std::sin(p.Omega * t_prime));
    return memory * std::polar(1.0, phase);
}

double jacobi_anger_coefficient(int n, double d_over_Omega) {
    // J_{-n}(z) = (-1)^n J_n(z); std::cyl_bessel_j wants a non-negative order and argument.
    const int order = std::abs(n);
    const double z = std::abs(d_over_Omega);
    double value = std::cyl_bessel_j(static_cast<double>(order), z);
    if (n < 0 && order % 2 == 1) value = -value;
    if (d_over_Omega < 0.0 && order % 2 == 1) value = -value;
    return value;
}

cplx jacobi_anger_phase(double d_over_Omega, double Omega, double t, int n_terms) {
    if (n_terms < 1) throw ArgumentError("jacobi_anger_phase: n_terms must be >= 1");
    const double theta = Omega * t;
    cplx sum = jacobi_anger_coefficient(0, d_over_Omega);
    for (int n = 1; n <= n_terms; ++n) {
        const double jn = 2.0 * jacobi_anger_coefficient(n, d_over_Omega);
        if (n % 2 == 0) {
            sum += jn * std::cos(n * theta);
        } else {
            sum += cplx(0.0, jn * std::sin(n * theta));
        }
    }
    return sum;
}

}  // namespace qbatt
