#include <gtest/gtest.h>

#include <cmath>

#include "ncstar/caratheodory.hpp"
#include "ncstar/functionals.hpp"
#include "ncstar/proofsurface.hpp"

using namespace ncstar;

TEST(GH2, ExamplesAndBox) {
    EXPECT_NEAR(eval_g_h2(0.0, 1.0), 0.25, 1e-15);
    EXPECT_EQ(eval_g_h2(0.0, 0.0), 0.0);
    EXPECT_NEAR(eval_g_h2_reduced(2.0), 272.0 / 768.0, 1e-15);
    for (double p = 0.0; p <= 2.0; p += 0.125) EXPECT_NEAR(eval_g_h2(p, 1.0), eval_g_h2_reduced(p), 1e-14);
    EXPECT_THROW(eval_g_h2(2.1, 0.5), std::domain_error);
    EXPECT_THROW(eval_g_h2(1.0, -0.1), std::domain_error);
}

TEST(GH3, QuotedExamples) {
    EXPECT_NEAR(eval_g_h3({0.0, 0.0, 1.0}), 1.0 / 9.0, 1e-15);
    for (double x : {0.0, 0.3, 1.0})
        for (double y : {0.0, 0.7, 1.0}) EXPECT_NEAR(eval_g_h3({2.0, x, y}), 5.0 / 576.0, 1e-15);
    EXPECT_NEAR(eval_g_h3({0.0, 1.0 / std::sqrt(3.0), 0.0}), 1.0 / (12.0 * std::sqrt(3.0)), 1e-15);
    EXPECT_THROW(eval_g_h3({0.0, 1.2, 0.0}), std::domain_error);
}

TEST(GH3, FacesAndEdgesMatchRestrictions) {
    for (int i = 0; i <= 20; ++i) {
        const double s = i / 20.0;
        for (int j = 0; j <= 20; ++j) {
            const double t = j / 20.0;
            EXPECT_NEAR(eval_g_h3({0.0, s, t}), h1(s, t), 1e-12);
            EXPECT_NEAR(eval_g_h3({2 * s, 0.0, t}), h2(2 * s, t), 1e-12);
            EXPECT_NEAR(eval_g_h3({2 * s, 1.0, t}), h3(2 * s), 1e-12);
        }
        EXPECT_NEAR(eval_g_h3({2 * s, 0.0, 0.0}), k1(2 * s), 1e-12);
        EXPECT_NEAR(eval_g_h3({2 * s, 0.0, 1.0}), k2(2 * s), 1e-12);
        EXPECT_NEAR(eval_g_h3({0.0, 0.0, s}), k4(s), 1e-12);
        EXPECT_NEAR(eval_g_h3({0.0, s, 1.0}), k5(s), 1e-12);
        EXPECT_NEAR(eval_g_h3({0.0, s, 0.0}), k6(s), 1e-12);
    }
}

TEST(GH3, StationaryPointsOfQuotedMaxima) {
    EXPECT_NEAR(central_derivative(k1, QuotedMaxima::k1_argmax()), 0.0, 1e-8);
    EXPECT_NEAR(central_derivative(k6, QuotedMaxima::k6_argmax()), 0.0, 1e-8);
    EXPECT_NEAR(central_derivative(h3, QuotedMaxima::h3_argmax()), 0.0, 1e-8);
    EXPECT_NEAR(k1(QuotedMaxima::k1_argmax()), QuotedMaxima::k1_max(), 1e-15);
    EXPECT_NEAR(h3(QuotedMaxima::h3_argmax()), QuotedMaxima::h3_max(), 1e-14);
}

TEST(MaximizeBox, CuboidMaximumAndGridDominance) {
    const auto m = maximize_box("g_h3", 51);
    EXPECT_NEAR(m.value, 1.0 / 9.0, 1e-6);
    EXPECT_NEAR(m.argmax.p, 0.0, 1e-9);
    EXPECT_NEAR(m.argmax.x, 0.0, 1e-9);
    EXPECT_NEAR(m.argmax.y, 1.0, 1e-9);
    for (int i = 0; i <= 50; ++i)
        for (int j = 0; j <= 25; ++j)
            for (int k = 0; k <= 25; ++k) ASSERT_GE(m.value, eval_g_h3({2.0 * i / 50, j / 25.0, k / 25.0}));
}

TEST(MaximizeBox, UnivariateObjectives) {
    EXPECT_NEAR(maximize_box("k1").value, QuotedMaxima::k1_max(), 1e-10);
    EXPECT_NEAR(maximize_box("k6").value, QuotedMaxima::k6_max(), 1e-10);
    EXPECT_NEAR(maximize_box("h3").value, QuotedMaxima::h3_max(), 1e-10);
    EXPECT_NEAR(maximize_box("g_h2_reduced").value, 272.0 / 768.0, 1e-12);
    EXPECT_THROW(maximize_box("nope"), std::invalid_argument);
    EXPECT_THROW(maximize_box("k1", 11), std::invalid_argument);
}

TEST(MaximizeBox, Deterministic) {
    const auto a = maximize_box("h2", 51);
    const auto b = maximize_box("h2", 51);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmax.p, b.argmax.p);
    EXPECT_EQ(a.argmax.y, b.argmax.y);
}

// The domination |H_3(1)| <= G(p, |gamma|, |eta|) on random parameter points.
TEST(GH3Properties, DominatesHankelOnLemmaPoints) {
    Rng rng(77);
    for (int i = 0; i < 10000; ++i) {
        const auto pt = sample_lemma_point(rng);
        const auto a = coefficients_from_p(lemma3_expand(pt));
        const double h = std::abs(hankel_31(a.a2, a.a3, a.a4, a.a5));
        ASSERT_LE(h, eval_g_h3({pt.p, std::abs(pt.gamma), std::abs(pt.eta)}) + 1e-9) << "point " << i;
    }
}
