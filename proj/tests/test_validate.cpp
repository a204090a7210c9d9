#include "qbatt/errors.hpp"
#include "qbatt/validate.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qbatt;

namespace {

const CheckResult& find_check(const ValidationReport& report, const std::string& name) {
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [&](const CheckResult& c) { return c.name == name; });
    if (it == report.checks.end()) throw std::runtime_error("missing check " + name);
    return *it;
}

}  // namespace

TEST(RunValidation, FastSuitePasses) {
    ValidateOptions opt;
    opt.fast = true;
    const auto report = run_validation(opt);
    ASSERT_EQ(report.checks.size(), 6u);
    for (const auto& c : report.checks) {
        EXPECT_TRUE(c.passed) << c.name << " residual " << c.residual << " " << c.detail;
        EXPECT_LE(c.residual, c.tolerance) << c.name;
    }
    EXPECT_TRUE(report.passed());
    EXPECT_DOUBLE_EQ(find_check(report, "analytic_limit").tolerance, 1e-8);
    EXPECT_DOUBLE_EQ(find_check(report, "dual_solver").tolerance, 1e-6);
    EXPECT_DOUBLE_EQ(find_check(report, "ergotropy_bruteforce").tolerance, 1e-10);
}

TEST(RunValidation, SignFaultIsCaught) {
    ValidateOptions opt;
    opt.fast = true;
    opt.invert_memory_sign = true;
    const auto report = run_validation(opt);
    EXPECT_FALSE(report.passed());
    const auto& analytic = find_check(report, "analytic_limit");
    EXPECT_FALSE(analytic.passed);
    EXPECT_FALSE(analytic.detail.empty());
    // Checks that never touch the memory term are unaffected.
    EXPECT_TRUE(find_check(report, "ergotropy_bruteforce").passed);
    EXPECT_TRUE(find_check(report, "jacobi_anger").passed);
}

TEST(RunValidation, CoarseQuadratureIsRejectedUpFront) {
    ValidateOptions opt;
    opt.fast = true;
    opt.quadrature_dt = 0.1;
    EXPECT_THROW(run_validation(opt), ConfigError);
}
