#include <gtest/gtest.h>

#include <cmath>

#include "ncstar/radii.hpp"
#include "oracles.hpp"

using namespace ncstar;

TEST(Radius, StarlikeOrder) {
    const auto r0 = solve_radius(RadiusKind::starlike_order, 0.0);
    EXPECT_EQ(r0.r, 1.0);
    EXPECT_EQ(r0.residual, 0.0);
    const auto r = solve_radius(RadiusKind::starlike_order, 0.5);
    EXPECT_LT(r.residual, 1e-12);
    const double want = oracle::scan_bisect([](double x) { return (1 - x) - 0.5 * std::cos(x); }, 0.0, 1.0, 100000);
    EXPECT_NEAR(r.r, want, 1e-12);
}

TEST(Radius, ResidualsAndBrackets) {
    for (auto kind : {RadiusKind::starlike_order, RadiusKind::convexity}) {
        for (double a = 0.0; a < 1.0; a += 0.1) {
            const auto r = solve_radius(kind, a);
            const RadiusEquation eq{kind, a};
            EXPECT_LT(r.residual, 1e-12);
            EXPECT_NEAR(std::abs(eq(r.r)), r.residual, 1e-15);
            EXPECT_GE(r.r, 0.0);
            EXPECT_LE(r.r, 1.0);
            EXPECT_LE(eq(r.bracket.first) * eq(r.bracket.second), 0.0);
        }
    }
}

TEST(Radius, Monotonicity) {
    double prev = 2.0;
    for (int i = 0; i <= 10; ++i) {
        const double r = solve_radius(RadiusKind::starlike_order, i / 11.0).r;
        EXPECT_LT(r, prev);
        prev = r;
    }
    // 1 - r = 2M cos r: the root moves toward 0 as M grows.
    prev = 2.0;
    for (double m = 0.05; m < 0.5; m += 0.05) {
        const double r = solve_radius(RadiusKind::m_starlike, m).r;
        EXPECT_LT(r, prev);
        prev = r;
    }
}

TEST(Radius, RadiusConsistentWithRealRange) {
    for (double a : {0.2, 0.5, 0.8}) {
        const double ra = solve_radius(RadiusKind::starlike_order, a).r;
        for (double f : {0.25, 0.5, 0.9, 0.999}) EXPECT_GT(radial_real_range(f * ra).lower, a);
    }
}

TEST(Radius, SaturationAndErrors) {
    EXPECT_TRUE(solve_radius(RadiusKind::mu_beta, 3.8).saturated);
    EXPECT_TRUE(solve_radius(RadiusKind::m_starlike, 0.5).saturated);
    const auto mb = solve_radius(RadiusKind::mu_beta, 2.0);
    EXPECT_FALSE(mb.saturated);
    EXPECT_NEAR(1.0 + mb.r, 2.0 * std::cos(mb.r), 1e-12);
    EXPECT_THROW(solve_radius(RadiusKind::starlike_order, 1.0), std::domain_error);
    EXPECT_THROW(solve_radius(RadiusKind::mu_beta, 1.0), std::domain_error);
    EXPECT_THROW(solve_radius(RadiusKind::m_starlike, 0.0), std::domain_error);
    EXPECT_EQ(parse_radius_kind("convexity"), RadiusKind::convexity);
    EXPECT_THROW(parse_radius_kind("round"), std::invalid_argument);
}

TEST(Radius, ConvexityRoot) {
    const auto r = solve_radius(RadiusKind::convexity, 0.0);
    const double want = oracle::scan_bisect(
        [](double x) { return (1 - x) * (1 - x) - x * std::cos(x) - x * (1 - x) * std::sin(x); }, 0.0, 1.0, 100000);
    EXPECT_NEAR(r.r, want, 1e-12);
    EXPECT_GT(std::abs(r.r - 0.454), 5e-3);
}

TEST(Inclusion, Constants) {
    const auto c = inclusion_constants();
    EXPECT_NEAR(c.kst_threshold, 1.37016, 1e-4);
    EXPECT_NEAR(c.mu_beta_threshold, 2.0 / std::cos(1.0), 1e-15);
    EXPECT_NEAR(c.at_threshold.x0 + c.at_threshold.u, 2.0 / std::cos(1.0), 1e-9);
    const double k = c.kst_threshold;
    EXPECT_NEAR(c.at_threshold.x0 + c.at_threshold.u, k / (k - 1), 1e-12);
    EXPECT_THROW(kst_ellipse(1.0), std::domain_error);
}

TEST(Inclusion, StpConstant) {
    const auto s = stp_constant();
    EXPECT_NEAR(s.a0, 0.402301, 1e-3);
    EXPECT_NEAR(s.theta0, 0.665124, 1e-3);
    EXPECT_LT(stp_t(0.0), s.a0);
    const auto neg = stp_constant(4096, -kPi, 0.0);
    EXPECT_NEAR(neg.a0, s.a0, 1e-9);
    EXPECT_THROW(stp_constant(100), std::domain_error);
}
