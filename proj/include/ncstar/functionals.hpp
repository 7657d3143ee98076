#pragma once

// Coefficient functionals of a class member (initial coefficients, Hankel and
// Hermitian-Toeplitz determinants, Fekete-Szego), the area-type coefficient
// sum and the convolution criterion.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/extremal.hpp"
#include "ncstar/generator.hpp"

namespace ncstar {

inline constexpr double kBoundTol = 1e-9;

/// Claimed bounds for the class; every flag compares with tolerance kBoundTol.
struct ClassBounds {
    static constexpr double a2 = 1.0;
    static constexpr double a3 = 3.0 / 4.0;
    static constexpr double a4 = 7.0 / 12.0;
    static constexpr double a5 = 1.0 / 3.0;
    static constexpr double h22 = 1.0 / 4.0;
    static constexpr double h31 = 1.0 / 9.0;
    static constexpr double t31_min = -1.0 / 15.0;
};

/// |a3 - mu a2^2| bound, piecewise in mu.
inline double fs_bound(double mu) {
    if (mu < 0.25) return 0.75 - mu;
    if (mu <= 1.25) return 0.5;
    return mu - 0.75;
}

struct CoefficientFlags {
    bool a2 = false;
    bool a3 = false;
    bool a4 = false;
    bool a5 = false;
    bool h22 = false;
    bool h31 = false;
    bool t21 = false;
    bool t31 = false;
    bool fs = false;

    /// Every flag except a5, whose claimed bound is contradicted by f~ itself.
    bool enforced_pass() const { return a2 && a3 && a4 && h22 && h31 && t21 && t31 && fs; }
};

struct FunctionalReport {
    cplx a2;
    cplx a3;
    cplx a4;
    cplx a5;
    cplx h22;
    cplx h31;
    double t21 = 0.0;
    double t31 = 0.0;
    std::map<double, double> fs;  // mu -> |a3 - mu a2^2|
    double coeff_sum_margin = 0.0;
    int coeff_sum_terms = 0;      // prefix length the margin was summed over
    double convolution_margin = std::numeric_limits<double>::quiet_NaN();
    CoefficientFlags flags;
};

inline cplx hankel_22(cplx a2, cplx a3, cplx a4) { return a2 * a4 - a3 * a3; }

inline cplx hankel_31(cplx a2, cplx a3, cplx a4, cplx a5) {
    return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
}

inline double toeplitz_21(cplx a2) { return 1.0 - std::norm(a2); }

inline double toeplitz_31(cplx a2, cplx a3) {
    return 1.0 - 2.0 * std::norm(a2) + 2.0 * (a2 * a2 * std::conj(a3)).real() - std::norm(a3);
}

inline const std::vector<double>& default_fs_mus() {
    static const std::vector<double> mus{-1.0, 0.0, 0.25, 0.5, 1.0, 1.25, 2.0, 3.0};
    return mus;
}

/// (4 - cos^2 1) - sum_{n=2}^{order} (n^2 cos^2 1 - 4)|a_n|^2 over the available prefix.
inline double coefficient_sum_margin(const ClassMember& f) {
    if (f.order() < 2) throw std::invalid_argument("coefficient_sum_margin: order must be >= 2");
    const double k1 = std::cos(1.0) * std::cos(1.0);
    double margin = 4.0 - k1;
    for (int n = 2; n <= f.order(); ++n) margin -= (n * n * k1 - 4.0) * std::norm(f.a(n));
    return margin;
}

/// sqrt((4 - cos^2 1)/(n^2 cos^2 1 - 4)); needs n^2 cos^2 1 > 4, i.e. n >= 4.
inline double an_bound(int n) {
    const double k1 = std::cos(1.0) * std::cos(1.0);
    const double den = n * n * k1 - 4.0;
    if (den <= 0.0) throw std::domain_error("an_bound: product bound inapplicable for n = " + std::to_string(n));
    return std::sqrt((4.0 - k1) / den);
}

// ---------------------------------------------------------------------------
// Convolution criterion
// ---------------------------------------------------------------------------

struct ConvolutionGrid {
    int theta_samples = 720;
    int radii = 24;
    int angles = 96;
    double max_radius = 0.99;
};

struct ConvolutionResult {
    double margin;
    double theta;
    cplx z;
};

/// inf over theta and z of |1 + sum_{n>=2}(n - phi(e^{i theta})) a_n z^{n-1} - phi(e^{i theta})|,
/// which equals |f'(z) - phi(e^{i theta}) f(z)/z|.  One local refinement pass
/// around the minimizing cell.
inline ConvolutionResult convolution_margin(const ClassMember& f, const ConvolutionGrid& grid = {}) {
    if (grid.theta_samples < 360) throw std::invalid_argument("convolution_margin: need >= 360 theta samples");
    const auto fp = derivative(f.series());
    const auto f_over_z = shift_down(f.series());
    // shift_down leaves the top coefficient zero, which is exact for f/z at order N-1.
    auto value = [&](double theta, cplx z) {
        const cplx ph = phi_eval(std::polar(1.0, theta));
        return std::abs(evaluate(fp, z) - ph * evaluate(f_over_z, z));
    };

    std::vector<cplx> phis(static_cast<std::size_t>(grid.theta_samples));
    for (int t = 0; t < grid.theta_samples; ++t) {
        phis[static_cast<std::size_t>(t)] = phi_eval(std::polar(1.0, -kPi + 2.0 * kPi * t / grid.theta_samples));
    }
    ConvolutionResult best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    int best_t = 0;
    int best_r = 0;
    int best_a = 0;
    const double dr = grid.max_radius / grid.radii;
    const double da = 2.0 * kPi / grid.angles;
    for (int ri = 0; ri <= grid.radii; ++ri) {
        const int nang = ri == 0 ? 1 : grid.angles;
        for (int ai = 0; ai < nang; ++ai) {
            const cplx z = std::polar(dr * ri, da * ai);
            const cplx d = evaluate(fp, z);
            const cplx b = evaluate(f_over_z, z);
            for (int t = 0; t < grid.theta_samples; ++t) {
                const double v = std::abs(d - phis[static_cast<std::size_t>(t)] * b);
                if (v < best.margin) {
                    best = {v, -kPi + 2.0 * kPi * t / grid.theta_samples, z};
                    best_t = t;
                    best_r = ri;
                    best_a = ai;
                }
            }
        }
    }
    // Refine on an 11^3 lattice spanning the neighbouring cells.
    const double dt = 2.0 * kPi / grid.theta_samples;
    for (int i = -5; i <= 5; ++i) {
        const double theta = -kPi + dt * (best_t + i / 5.0);
        for (int j = -5; j <= 5; ++j) {
            const double r = std::clamp(dr * (best_r + j / 5.0), 0.0, grid.max_radius);
            for (int k = -5; k <= 5; ++k) {
                const cplx z = std::polar(r, da * (best_a + k / 5.0));
                const double v = value(theta, z);
                if (v < best.margin) best = {v, theta, z};
            }
        }
    }
    return best;
}

struct SufficientCheck {
    double lhs_max;  // max over theta of sum |n - phi(e^{i theta})||a_n| + M
    bool holds;      // lhs_max < 1
};

/// sum_{n>=2} |n - phi(e^{i theta})| |a_n| + M < 1 for every theta, M = 4 cos 1/(1 + cos 2).
inline SufficientCheck sufficient_coefficient_check(const ClassMember& f, int theta_samples = 720) {
    const double m = phi_re_max_paper_form();
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < theta_samples; ++t) {
        const cplx ph = phi_eval(std::polar(1.0, -kPi + 2.0 * kPi * t / theta_samples));
        double s = m;
        for (int n = 2; n <= f.order(); ++n) s += std::abs(static_cast<double>(n) - ph) * std::abs(f.a(n));
        worst = std::max(worst, s);
    }
    return {worst, worst < 1.0};
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct ReportOptions {
    std::vector<double> fs_mus = default_fs_mus();
    bool with_convolution = false;
    ConvolutionGrid convolution{};
};

inline FunctionalReport compute_report(const ClassMember& f, const ReportOptions& opts = {}) {
    if (f.order() < 5) throw std::invalid_argument("compute_report: order must be >= 5");
    FunctionalReport r;
    r.a2 = f.a(2);
    r.a3 = f.a(3);
    r.a4 = f.a(4);
    r.a5 = f.a(5);
    r.h22 = hankel_22(r.a2, r.a3, r.a4);
    r.h31 = hankel_31(r.a2, r.a3, r.a4, r.a5);
    r.t21 = toeplitz_21(r.a2);
    r.t31 = toeplitz_31(r.a2, r.a3);
    for (double mu : opts.fs_mus) r.fs[mu] = std::abs(r.a3 - mu * r.a2 * r.a2);
    r.coeff_sum_margin = coefficient_sum_margin(f);
    r.coeff_sum_terms = f.order() - 1;
    if (opts.with_convolution) r.convolution_margin = convolution_margin(f, opts.convolution).margin;

    auto& fl = r.flags;
    fl.a2 = std::abs(r.a2) <= ClassBounds::a2 + kBoundTol;
    fl.a3 = std::abs(r.a3) <= ClassBounds::a3 + kBoundTol;
    fl.a4 = std::abs(r.a4) <= ClassBounds::a4 + kBoundTol;
    fl.a5 = std::abs(r.a5) <= ClassBounds::a5 + kBoundTol;
    fl.h22 = std::abs(r.h22) <= ClassBounds::h22 + kBoundTol;
    fl.h31 = std::abs(r.h31) <= ClassBounds::h31 + kBoundTol;
    fl.t21 = r.t21 >= -kBoundTol && r.t21 <= 1.0 + kBoundTol;
    fl.t31 = r.t31 >= ClassBounds::t31_min - kBoundTol && r.t31 <= 1.0 + kBoundTol;
    fl.fs = true;
    for (const auto& [mu, v] : r.fs) fl.fs = fl.fs && v <= fs_bound(mu) + kBoundTol;
    return r;
}

using ojson = nlohmann::ordered_json;

inline ojson complex_json(cplx c) { return ojson::array({c.real(), c.imag()}); }

inline ojson to_json(const FunctionalReport& r) {
    ojson j;
    j["a2"] = complex_json(r.a2);
    j["a3"] = complex_json(r.a3);
    j["a4"] = complex_json(r.a4);
    j["a5"] = complex_json(r.a5);
    j["h22"] = complex_json(r.h22);
    j["h22_abs"] = std::abs(r.h22);
    j["h31"] = complex_json(r.h31);
    j["h31_abs"] = std::abs(r.h31);
    j["t21"] = r.t21;
    j["t31"] = r.t31;
    ojson fs = ojson::array();
    for (const auto& [mu, v] : r.fs) fs.push_back({{"mu", mu}, {"value", v}, {"bound", fs_bound(mu)}});
    j["fs"] = fs;
    j["coeff_sum_margin"] = r.coeff_sum_margin;
    j["coeff_sum_terms"] = r.coeff_sum_terms;
    if (std::isfinite(r.convolution_margin)) j["convolution_margin"] = r.convolution_margin;
    else j["convolution_margin"] = nullptr;
    j["flags"] = {{"a2", r.flags.a2}, {"a3", r.flags.a3}, {"a4", r.flags.a4}, {"a5", r.flags.a5},
                  {"h22", r.flags.h22}, {"h31", r.flags.h31}, {"t21", r.flags.t21}, {"t31", r.flags.t31},
                  {"fs", r.flags.fs}};
    return j;
}

}  // namespace ncstar
