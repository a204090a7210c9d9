#include "qbatt/errors.hpp"
#include "qbatt/kernel.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace qbatt;

namespace {

ModelParams params(double d, double Omega, double delta = 0.0) {
    ModelParams p;
    p.d = d;
    p.Omega = Omega;
    p.delta = delta;
    return p;
}

}  // namespace

TEST(Kernel, CoincidentTimesGiveOne) {
    for (double t : {0.0, 0.3, 7.0}) {
        EXPECT_EQ(kernel(params(10.0, 1.0, 2.0), t, t), cplx(1.0, 0.0));
        EXPECT_EQ(kernel(params(0.0, 0.0), t, t), cplx(1.0, 0.0));
    }
}

TEST(Kernel, UnmodulatedLorentzianMemory) {
    for (double tau : {0.0, 0.5, 3.0, 12.0}) {
        const cplx k = kernel(params(0.0, 0.0), 1.0 + tau, 1.0);
        EXPECT_NEAR(k.real(), std::exp(-tau), 1e-15);
        EXPECT_NEAR(k.imag(), 0.0, 1e-15);
    }
}

TEST(Kernel, ModulatedValueMatchesHighPrecisionEvaluation) {
    // exp(-0.5) * exp(10 i (sin 1 - sin 0.5)) evaluated with 40-digit arithmetic.
    const cplx expected(-0.53830805549307312822, -0.27947071145776407298);
    const cplx k = kernel(params(10.0, 1.0), 1.0, 0.5);
    EXPECT_NEAR(k.real(), expected.real(), 1e-14);
    EXPECT_NEAR(k.imag(), expected.imag(), 1e-14);
}

TEST(Kernel, Errors) {
    EXPECT_THROW(kernel(params(0.0, 0.0), 0.5, 1.0), ArgumentError);
    EXPECT_THROW(kernel(params(10.0, 0.0), 1.0, 0.5), ConfigError);
    EXPECT_THROW(modulation_phase(10.0, 0.0, 1.0), ConfigError);
}

TEST(Kernel, ModulationOffIgnoresStoredOmega) {
    EXPECT_EQ(kernel(params(0.0, 3.0), 2.0, 1.0), kernel(params(0.0, 0.0), 2.0, 1.0));
}

TEST(JacobiAnger, ZeroArgumentIsOne) {
    for (double t : {0.0, 0.7, 5.0}) {
        EXPECT_NEAR(std::abs(jacobi_anger_phase(0.0, 1.0, t, 5) - 1.0), 0.0, 1e-15);
    }
}

TEST(JacobiAnger, FortyTermsMatchExactPhase) {
    const double z = 10.0;
    for (double Omega : {0.5, 1.0, 3.0}) {
        for (int k = 0; k <= 4000; ++k) {
            const double t = (20.0 / Omega) * k / 4000.0;
            const cplx exact = std::polar(1.0, z * std::sin(Omega * t));
            ASSERT_LT(std::abs(jacobi_anger_phase(z, Omega, t, 40) - exact), 1e-10) << "t = " << t;
        }
    }
}

TEST(JacobiAnger, TruncationErrorShrinksWithTerms) {
    const double z = 10.0;
    double previous = 1e9;
    for (int n : {5, 10, 15, 20}) {
        double worst = 0.0;
        for (int k = 0; k <= 500; ++k) {
            const double t = 2.0 * std::numbers::pi * k / 500.0;
            worst = std::max(worst, std::abs(jacobi_anger_phase(z, 1.0, t, n) - std::polar(1.0, z * std::sin(t))));
        }
        EXPECT_LT(worst, previous);
        previous = worst;
    }
    EXPECT_THROW(jacobi_anger_phase(1.0, 1.0, 0.0, 0), ArgumentError);
}

TEST(JacobiAnger, FirstZeroOfJ0) {
    // Root of the J0 power series located by bisection, independent of std::cyl_bessel_j.
    const double root = testref::bisect(testref::bessel_j0_series, 2.0, 3.0);
    EXPECT_NEAR(root, 2.404826, 1e-6);
    EXPECT_NEAR(root, 2.4048255576957728, 1e-12);
    EXPECT_LT(std::abs(jacobi_anger_coefficient(0, 2.404826)), 1e-6);
    EXPECT_LT(std::abs(jacobi_anger_coefficient(0, root)), 1e-14);
}

TEST(JacobiAnger, CoefficientSymmetries) {
    for (int n = 0; n < 6; ++n) {
        const double sign = n % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(jacobi_anger_coefficient(-n, 3.0), sign * jacobi_anger_coefficient(n, 3.0), 1e-15);
        EXPECT_NEAR(jacobi_anger_coefficient(n, -3.0), sign * jacobi_anger_coefficient(n, 3.0), 1e-15);
    }
}
