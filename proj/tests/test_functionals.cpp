#include <gtest/gtest.h>

#include <cmath>

#include "ncstar/caratheodory.hpp"
#include "ncstar/functionals.hpp"
#include "oracles.hpp"

using namespace ncstar;

namespace {

std::vector<cplx> coeff_vector(const ClassMember& f) {
    std::vector<cplx> a;
    for (int k = 0; k <= f.order(); ++k) a.push_back(f.a(k));
    return a;
}

}  // namespace

TEST(Functionals, ExtremalValues) {
    const auto r = compute_report(build_extremal(2, 16));
    EXPECT_NEAR(std::abs(r.h22 - 1.0 / 48.0), 0.0, 1e-14);
    EXPECT_NEAR(r.t21, 0.0, 1e-15);
    EXPECT_NEAR(r.t31, -1.0 / 16.0, 1e-15);
    EXPECT_TRUE(r.flags.enforced_pass());
    EXPECT_FALSE(r.flags.a5);
    EXPECT_EQ(r.coeff_sum_terms, 15);
}

TEST(Functionals, DeterminantsMatchOracle) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto f = member_from_measure(sample_measure(s, 8), 8);
        const auto a = coeff_vector(f);
        EXPECT_NEAR(std::abs(hankel_22(a[2], a[3], a[4]) - oracle::hankel(a, 2, 2)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(hankel_31(a[2], a[3], a[4], a[5]) - oracle::hankel(a, 3, 1)), 0.0, 1e-14);
        EXPECT_NEAR(toeplitz_21(a[2]), oracle::toeplitz(a, 2, 1), 1e-14);
        EXPECT_NEAR(toeplitz_31(a[2], a[3]), oracle::toeplitz(a, 3, 1), 1e-13);
    }
}

TEST(Functionals, SharpnessThroughPipeline) {
    const HerglotzMeasure two{{{0.5, 0.0}, {0.5, M_PI}}, 0};
    const auto f3 = member_from_measure(two, 8);
    EXPECT_NEAR(std::abs(hankel_22(f3.a(2), f3.a(3), f3.a(4))), 0.25, 1e-12);
    const HerglotzMeasure three{{{1.0 / 3, 0.0}, {1.0 / 3, 2 * M_PI / 3}, {1.0 - 2.0 / 3, -2 * M_PI / 3}}, 0};
    const auto f4 = member_from_measure(three, 8);
    EXPECT_NEAR(std::abs(hankel_31(f4.a(2), f4.a(3), f4.a(4), f4.a(5))), 1.0 / 9.0, 1e-12);
}

TEST(Functionals, FeketeSzegoBound) {
    EXPECT_DOUBLE_EQ(fs_bound(0.0), 0.75);
    EXPECT_DOUBLE_EQ(fs_bound(1.0), 0.5);
    EXPECT_DOUBLE_EQ(fs_bound(2.0), 1.25);
    // continuity at the breakpoints
    EXPECT_NEAR(fs_bound(0.25 - 1e-12), fs_bound(0.25), 1e-11);
    EXPECT_NEAR(fs_bound(1.25 + 1e-12), fs_bound(1.25), 1e-11);
}

TEST(Functionals, CoefficientSumAndAnBound) {
    EXPECT_THROW(an_bound(3), std::domain_error);
    const double c2 = std::cos(1.0) * std::cos(1.0);
    EXPECT_NEAR(an_bound(4), std::sqrt((4 - c2) / (16 * c2 - 4)), 1e-15);
    const auto id = ClassMember::identity(10);
    EXPECT_NEAR(coefficient_sum_margin(id), 4.0 - c2, 1e-15);
}

TEST(Functionals, ConvolutionMargin) {
    // f~ sits on the boundary of the class: the margin is small.
    const auto m = convolution_margin(build_extremal(2, 16));
    EXPECT_LT(m.margin, 1e-2);
    // identity: the margin is min |1 - phi(e^{it})| > 0, since 1 = phi(0) is interior
    const auto mi = convolution_margin(ClassMember::identity(8));
    double want = 1e300;
    for (int t = 0; t < 720; ++t) want = std::min(want, std::abs(1.0 - phi_eval(std::polar(1.0, -M_PI + 2 * M_PI * t / 720))));
    EXPECT_GT(mi.margin, 0.1);
    EXPECT_LE(mi.margin, want);
    // M = 4 cos 1/(1 + cos 2) > 1 makes the sufficient condition unsatisfiable
    const auto sc = sufficient_coefficient_check(ClassMember::identity(8));
    EXPECT_GT(sc.lhs_max, 1.0);
    EXPECT_FALSE(sc.holds);
}

TEST(Functionals, JsonShape) {
    ReportOptions opts;
    opts.with_convolution = false;
    const auto j = to_json(compute_report(build_extremal(2, 8), opts));
    EXPECT_TRUE(j["a2"].is_array());
    EXPECT_EQ(j["a2"].size(), 2u);
    EXPECT_TRUE(j["convolution_margin"].is_null());
    EXPECT_TRUE(j["flags"]["h22"].get<bool>());
    EXPECT_EQ(j["fs"].size(), default_fs_mus().size());
    const auto text = j.dump();
    EXPECT_EQ(ojson::parse(text).dump(), text);
}

// Seeded search over Herglotz members: every enforced bound holds.
TEST(FunctionalsProperties, RandomMembersRespectBounds) {
    for (std::uint64_t s = 0; s < 2000; ++s) {
        const auto f = member_from_measure(sample_measure(0xC0FFEE + s, 8), 16);
        const auto r = compute_report(f);
        EXPECT_TRUE(r.flags.enforced_pass()) << "seed " << 0xC0FFEE + s;
    }
}
