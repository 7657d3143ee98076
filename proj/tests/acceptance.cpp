// Acceptance checks 1-10.  Prints one PASS/FAIL line per criterion, with the
// measured quantities, and exits non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ncstar/caratheodory.hpp"
#include "ncstar/extremal.hpp"
#include "ncstar/functionals.hpp"
#include "ncstar/generator.hpp"
#include "ncstar/proofsurface.hpp"
#include "ncstar/radii.hpp"
#include "ncstar/report.hpp"
#include "ncstar/series.hpp"
#include "ncstar/subordconst.hpp"
#include "oracles.hpp"

using namespace ncstar;

namespace {

struct Criterion {
    bool ok = true;
    std::vector<std::string> failures;
    std::string detail;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

DiscrepancyEntry row(const std::vector<DiscrepancyEntry>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.constant_name == name) return r;
    throw std::runtime_error("missing report row " + name);
}

Criterion c1(const std::vector<DiscrepancyEntry>& rows) {
    Criterion c;
    const auto f = build_extremal(2, 8);
    c.check(near(f.a(2).real(), 1.0, 1e-12) && std::abs(f.a(2).imag()) <= 1e-12, "a2 = 1");
    c.check(near(f.a(3).real(), 0.75, 1e-12), "a3 = 3/4");
    c.check(near(f.a(4).real(), 7.0 / 12.0, 1e-12), "a4 = 7/12");
    c.check(near(f.a(5).real(), 5.0 / 12.0, 1e-12), "a5 = 5/12");
    const auto r = row(rows, "a5_extremal");
    c.check(r.status == DiscrepancyStatus::paper_internal_conflict && r.paper_value == 35.0 / 96.0, "a5 row flags 35/96");
    c.detail = fmt("a2..a5 = %.17g, %.17g, ", f.a(2).real(), f.a(3).real()) +
               fmt("%.17g, %.17g", f.a(4).real(), f.a(5).real());
    return c;
}

Criterion c2() {
    Criterion c;
    const auto g = g_series(5);
    const double want[] = {0.0, 1.0, 0.25, 1.0 / 6.0, 5.0 / 96.0, 1.0 / 24.0};
    double worst = 0.0;
    for (int k = 0; k <= 5; ++k) worst = std::max(worst, std::abs(g[static_cast<std::size_t>(k)] - want[k]));
    c.check(worst <= 1e-12, "g_series(5) coefficients");
    c.detail = fmt("max coefficient error %.3g", worst);
    return c;
}

Criterion c3(const std::vector<DiscrepancyEntry>& rows) {
    Criterion c;
    const auto g = gamma_values();
    const auto stp = stp_constant();
    const auto par = parabola_b0();
    const auto bounds = phi_global_bounds();
    c.check(near(g.gamma1, -0.904233, 1e-4), fmt("gamma1 = %.9g (|diff| %.3g > 1e-4)", g.gamma1, std::abs(g.gamma1 + 0.904233)));
    c.check(near(g.gamma2, 1.53664, 1e-4), fmt("gamma2 = %.9g (|diff| %.3g > 1e-4)", g.gamma2, std::abs(g.gamma2 - 1.53664)));
    c.check(near(stp.a0, 0.402301, 1e-3), fmt("a0 = %.9g", stp.a0));
    c.check(near(stp.theta0, 0.665124, 1e-3), fmt("theta0 = %.9g", stp.theta0));
    c.check(near(par.min_value, -0.988408, 2e-3), fmt("min_value = %.9g", par.min_value));
    c.check(near(par.b0, -0.005796, 1e-4), fmt("b0 = %.9g", par.b0));
    c.check(near(bounds.im_abs_max, 1.6471, 1e-3), fmt("gamma0 = %.9g", bounds.im_abs_max));
    c.check(near(g.im_gi, gudermannian(1.0), 1e-6), fmt("Im g(i) = %.12g vs gd(1) = %.12g", g.im_gi, gudermannian(1.0)));
    c.check(row(rows, "im_g_i").status == DiscrepancyStatus::mismatch, "Im g(i) row is not a mismatch");
    c.detail = fmt("gamma1 %.9g gamma2 %.9g Im g(i) %.9g", g.gamma1, g.gamma2, g.im_gi) +
               fmt(" a0 %.9g theta0 %.9g", stp.a0, stp.theta0) + fmt(" min %.9g b0 %.9g gamma0 %.9g", par.min_value, par.b0, bounds.im_abs_max);
    return c;
}

Criterion c4() {
    Criterion c;
    const auto m = maximize_box("g_h3", 201);
    c.check(near(m.value, 1.0 / 9.0, 1e-6), fmt("max G = %.12g", m.value));
    c.check(near(m.argmax.p, 0.0, 1e-6) && near(m.argmax.x, 0.0, 1e-6) && near(m.argmax.y, 1.0, 1e-6),
            fmt("argmax (%.6g, %.6g, %.6g)", m.argmax.p, m.argmax.x, m.argmax.y));
    const auto f3 = member_from_measure(two_point_measure(), 16);
    const auto f4 = member_from_measure(three_point_measure(), 16);
    const double h2 = std::abs(hankel_22(f3.a(2), f3.a(3), f3.a(4)));
    const double h3 = std::abs(hankel_31(f4.a(2), f4.a(3), f4.a(4), f4.a(5)));
    c.check(near(h2, 0.25, 1e-12), fmt("|H22(f3)| = %.17g", h2));
    c.check(near(h3, 1.0 / 9.0, 1e-12), fmt("|H31(f4)| = %.17g", h3));
    c.detail = fmt("max G %.15g, |H22(f3)| %.17g, |H31(f4)| %.17g", m.value, h2, h3);
    return c;
}

Criterion c5() {
    Criterion c;
    const double k1m = maximize_box("k1", 201).value;
    const auto k6m = maximize_box("k6", 201);
    const double h3m = maximize_box("h3", 201).value;
    c.check(near(k1m, (7 * std::sqrt(21.0) - 27) / 300, 1e-10), fmt("k1 max %.17g", k1m));
    c.check(near(k6m.value, 1 / (12 * std::sqrt(3.0)), 1e-10), fmt("k6 max %.17g", k6m.value));
    c.check(near(k6(1 / std::sqrt(3.0)), 1 / (12 * std::sqrt(3.0)), 1e-10), "k6(1/sqrt 3)");
    c.check(near(k6m.argmax.x, 1 / std::sqrt(3.0), 1e-6), fmt("k6 argmax %.12g", k6m.argmax.x));
    c.check(near(h3m, (587 * std::sqrt(587.0) - 14200) / 324, 1e-10), fmt("h3 max %.17g", h3m));
    c.detail = fmt("k1 %.15g k6 %.15g h3 %.15g", k1m, k6m.value, h3m);
    return c;
}

Criterion c6() {
    Criterion c;
    const double lhs = 4 * std::cos(1.0) / (1 + std::cos(2.0));
    c.check(near(lhs, 2 / std::cos(1.0), 1e-14), "4cos1/(1+cos2) = 2/cos1");
    const auto ic = inclusion_constants();
    c.check(near(ic.kst_threshold, 1.37016, 1e-4), fmt("kst threshold %.12g", ic.kst_threshold));
    const double sum = ic.at_threshold.x0 + ic.at_threshold.u;
    c.check(near(sum, 2 / std::cos(1.0), 1e-9), fmt("x0 + u = %.17g", sum));
    c.detail = fmt("identity diff %.3g, kst %.12g, x0+u-2sec1 %.3g", std::abs(lhs - 2 / std::cos(1.0)), ic.kst_threshold,
                   sum - 2 / std::cos(1.0));
    return c;
}

Criterion c7() {
    Criterion c;
    const BoundaryPolygon region;
    constexpr double tol = 1e-9;
    double worst_h22 = 0, worst_h31 = 0, min_t31 = 1, min_t21 = 2, max_t21 = -1;
    int outside = 0;
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto m = sample_measure(0xC0FFEEull + static_cast<std::uint64_t>(i), 8);
        const auto f = member_from_measure(m, 16);
        const auto r = compute_report(f);
        worst_h22 = std::max(worst_h22, std::abs(r.h22));
        worst_h31 = std::max(worst_h31, std::abs(r.h31));
        min_t31 = std::min(min_t31, r.t31);
        min_t21 = std::min(min_t21, r.t21);
        max_t21 = std::max(max_t21, r.t21);
        const bool ok = r.t21 >= -tol && r.t21 <= 1 + tol && r.t31 >= -1.0 / 15 - tol && std::abs(r.h22) <= 0.25 + tol &&
                        std::abs(r.h31) <= 1.0 / 9 + tol && std::abs(r.a2) <= 1 + tol && std::abs(r.a3) <= 0.75 + tol &&
                        std::abs(r.a4) <= 7.0 / 12 + tol;
        if (!ok) ++failures;
        for (int k = 0; k < 32; ++k) {
            const cplx z = std::polar(0.95, 2 * kPi * k / 32);
            if (!region.contains(member_log_derivative_eval(m, z))) ++outside;
        }
    }
    c.check(failures == 0, std::to_string(failures) + " samples violate a coefficient bound");
    c.check(outside == 0, std::to_string(outside) + " grid points of z f'/f fall outside phi(D)");
    c.detail = fmt("max|H22| %.9g max|H31| %.9g min T31 %.9g", worst_h22, worst_h31, min_t31) +
               fmt(" T21 in [%.9g, %.9g]", min_t21, max_t21);
    return c;
}

Criterion c8(const std::vector<DiscrepancyEntry>& rows) {
    Criterion c;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double a = i / 10.0;
        worst = std::max({worst, solve_radius(RadiusKind::starlike_order, a).residual,
                          solve_radius(RadiusKind::convexity, a).residual});
        worst = std::max(worst, solve_radius(RadiusKind::mu_beta, 1.1 + 0.25 * i).residual);
        worst = std::max(worst, solve_radius(RadiusKind::m_starlike, 0.05 + 0.05 * i).residual);
    }
    c.check(worst < 1e-12, fmt("worst residual %.3g", worst));
    const double r = solve_radius(RadiusKind::starlike_order, 0.5).r;
    const double oracle_r = oracle::scan_bisect([](double x) { return (1 - x) - 0.5 * std::cos(x); }, 0.0, 1.0, 1000000);
    c.check(near(r, oracle_r, 1e-10), fmt("r_alpha(0.5) %.17g vs oracle %.17g", r, oracle_r));
    const auto rc = solve_radius(RadiusKind::convexity, 0.0);
    const double eq = (1 - rc.r) * (1 - rc.r) - rc.r * std::cos(rc.r) - rc.r * (1 - rc.r) * std::sin(rc.r);
    c.check(std::abs(eq) < 1e-12, fmt("convexity residual %.3g", eq));
    const auto status = row(rows, "convexity_radius").status;
    const bool want_match = std::abs(rc.r - 0.454) <= 5e-3;
    c.check((status == DiscrepancyStatus::match) == want_match, "convexity row status");
    c.detail = fmt("worst residual %.3g, r_alpha(0.5) %.15g, r_c %.15g", worst, r, rc.r) +
               std::string(" (row: ") + to_string(status) + ")";
    return c;
}

Criterion c9() {
    Criterion c;
    std::mt19937_64 gen(0xC0FFEE);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_series = [&](int order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) v[static_cast<std::size_t>(k)] = cplx{u(gen), u(gen)} / double(k + 1);
        return PowerSeries(std::move(v));
    };
    double w_explog = 0, w_int = 0, w_assoc = 0;
    for (int t = 0; t < 1000; ++t) {
        const int order = 4 + static_cast<int>(gen() % 13);
        const auto g = random_series(order);
        w_explog = std::max(w_explog, max_abs_diff(log(exp(g)), g));
        const auto a = random_series(order);
        const auto da = derivative(integrate(a));
        for (int k = 0; k < order; ++k) w_int = std::max(w_int, std::abs(da[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)]));
        const auto b = random_series(order);
        const auto d = random_series(order);
        w_assoc = std::max(w_assoc, max_abs_diff((a * b) * d, a * (b * d)));
    }
    c.check(w_explog <= 1e-10, fmt("exp/log %.3g", w_explog));
    c.check(w_int <= 1e-13, fmt("d/dz integral %.3g", w_int));
    c.check(w_assoc <= 1e-13, fmt("associativity %.3g", w_assoc));
    c.detail = fmt("exp/log %.3g, derivative-of-integral %.3g, associativity %.3g", w_explog, w_int, w_assoc);
    return c;
}

Criterion c10() {
    Criterion c;
    Rng rng(0xC0FFEE);
    double floor = 1.0;
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto v = as_vector(lemma3_expand(sample_lemma_point(rng)));
        floor = std::min(floor, toeplitz_min_eigenvalue(v, 5));
        if (!toeplitz_psd_check(v, 5)) ++bad;
    }
    c.check(bad == 0, std::to_string(bad) + " points fail the PSD check");
    c.detail = fmt("min eigenvalue %.3g", floor);
    return c;
}

}  // namespace

int main() {
    ReportConfig cfg;
    cfg.samples = 500;
    cfg.lemma_points = 500;
    const auto rows = discrepancy_report(cfg);
    struct Item {
        int id;
        const char* title;
        std::function<Criterion()> run;
    };
    const std::vector<Item> items{
        {1, "extremal coefficients", [&] { return c1(rows); }},
        {2, "g-series coefficients", c2},
        {3, "constants", [&] { return c3(rows); }},
        {4, "Hankel maxima", c4},
        {5, "closed-form stationary values", c5},
        {6, "identity and k-ST ellipse", c6},
        {7, "random-search invariants", c7},
        {8, "radius solvers", [&] { return c8(rows); }},
        {9, "series engine properties", c9},
        {10, "Lemma 3 validity", c10},
    };
    int failed = 0;
    for (const auto& it : items) {
        const auto c = it.run();
        std::printf("%s criterion %d: %s -- %s\n", c.ok ? "PASS" : "FAIL", it.id, it.title, c.detail.c_str());
        for (const auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
        if (!c.ok) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
    return failed == 0 ? 0 : 1;
}
