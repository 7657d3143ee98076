#pragma once

// Constants behind the subordination results: gamma_1 = g(-1), gamma_2 = g(1),
// Im g(i), the thresholds for Janowski / exponential / cardioid / sine
// targets, the parabolic-region constant b_0 and assorted circle bounds.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/generator.hpp"
#include "ncstar/numerics.hpp"
#include "ncstar/series.hpp"

namespace ncstar {

struct ThresholdReport {
    std::string name;
    double computed;
    std::optional<double> paper_value;
    std::optional<double> abs_diff;
    std::string note;
};

inline ThresholdReport make_threshold(std::string name, double computed, std::optional<double> paper,
                                      std::string note = {}) {
    std::optional<double> diff;
    if (paper) diff = std::abs(computed - *paper);
    return {std::move(name), computed, paper, diff, std::move(note)};
}

/// Reference values quoted for the class constants.
struct PaperValues {
    static constexpr double gamma1 = -0.904233;
    static constexpr double gamma2 = 1.53664;
    static constexpr double im_gi = 0.862897;
    static constexpr double exp_threshold = 1.4308;
    static constexpr double cardioid_threshold = 2.45796;
    static constexpr double sine_threshold = 1.82614;
    static constexpr double parabola_min = -0.988408;
    static constexpr double parabola_theta = -2.47734;
    static constexpr double b0 = -0.005796;
};

struct GammaConstants {
    double gamma1;  // g(-1)
    double gamma2;  // g(1)
    double im_gi;   // Im g(i) = gd(1)
};

inline GammaConstants gamma_values() {
    return {g_eval(-1.0).real(), g_eval(1.0).real(), g_eval(cplx{0.0, 1.0}).imag()};
}

inline std::vector<ThresholdReport> gamma_constants() {
    const auto g = gamma_values();
    return {make_threshold("gamma1", g.gamma1, PaperValues::gamma1),
            make_threshold("gamma2", g.gamma2, PaperValues::gamma2),
            make_threshold("im_gi", g.im_gi, PaperValues::im_gi, "closed form gd(1)")};
}

/// Sum of the g series through z^degree at z = x.
inline double g_partial_sum(double x, int degree) {
    return evaluate(g_series(degree), x).real();
}

// ---------------------------------------------------------------------------
// Subordination thresholds
// ---------------------------------------------------------------------------

struct ThresholdTarget {
    enum class Kind { janowski, exp, cardioid, sine } kind;
    double a = 0.0;
    double b = 0.0;

    static ThresholdTarget janowski(double a, double b) { return {Kind::janowski, a, b}; }
    static ThresholdTarget exponential() { return {Kind::exp}; }
    static ThresholdTarget cardioid() { return {Kind::cardioid}; }
    static ThresholdTarget sine() { return {Kind::sine}; }
};

struct SubordinationThreshold {
    std::string target;
    double value;
    std::vector<double> candidates;  // lower bounds whose max is `value`
    std::string note;
};

inline SubordinationThreshold subordination_threshold(const ThresholdTarget& t) {
    const auto g = gamma_values();
    const double e = std::numbers::e;
    switch (t.kind) {
        case ThresholdTarget::Kind::janowski: {
            if (!(t.b >= -1.0 && t.b < t.a && t.a <= 1.0)) {
                throw std::invalid_argument("subordination_threshold: need -1 <= B < A <= 1");
            }
            SubordinationThreshold r{"janowski", g.gamma2 * (1.0 - t.b) / (t.a - t.b), {}, {}};
            r.candidates.push_back(r.value);
            const double den = t.a - t.b - 1.0 - t.b * t.b;
            if (den > 0.0) {
                const double second = (1.0 + t.b * t.b) / den * g.im_gi;
                r.candidates.push_back(second);
                r.value = std::max(r.value, second);
            } else {
                r.note = "second candidate undefined (A - B - 1 - B^2 <= 0)";
            }
            return r;
        }
        case ThresholdTarget::Kind::exp: {
            const double v = e * g.gamma1 / (1.0 - e);
            return {"exp", v, {v}, {}};
        }
        case ThresholdTarget::Kind::cardioid: {
            const double c1 = -e * g.gamma1;
            const double c2 = g.gamma2 / e;
            return {"cardioid", std::max(c1, c2), {c1, c2}, "max(-e gamma1, gamma2/e); attained by -e gamma1"};
        }
        case ThresholdTarget::Kind::sine: {
            const double v = g.gamma2 / std::sin(1.0);
            return {"sine", v, {v}, {}};
        }
    }
    throw std::invalid_argument("subordination_threshold: unknown target");
}

// ---------------------------------------------------------------------------
// Parabolic region constant b_0
// ---------------------------------------------------------------------------

/// u + iv = phi(zeta) + m zeta phi'(zeta)/phi(zeta) at zeta = e^{i theta},
/// spelled out in real form with x = cos theta, y = sin theta.
inline std::pair<double, double> parabola_uv(double theta, double m = 1.0) {
    const double x = std::cos(theta);
    const double y = std::sin(theta);
    const double d = std::cos(2.0 * x) + std::cosh(2.0 * y);
    const double u = 2.0 * ((x + 1.0) * std::cos(x) * std::cosh(y) - y * std::sinh(y) * std::sin(x)) / d +
                     m * (0.5 + (x * std::sin(2.0 * x) - y * std::sinh(2.0 * y)) / d);
    const double v = 2.0 * ((x + 1.0) * std::sinh(y) * std::sin(x) + y * std::cos(x) * std::cosh(y)) / d +
                     m * (y / ((x + 1.0) * (x + 1.0) + y * y) + (y * std::sin(2.0 * x) + x * std::sinh(2.0 * y)) / d);
    return {u, v};
}

inline double parabola_objective(double theta) {
    const auto [u, v] = parabola_uv(theta);
    return v * v - 2.0 * u;
}

struct ParabolaB0 {
    double theta_min;
    double min_value;
    double b0;
    double global_theta;  // the global minimum sits at zeta = 1, which the argument excludes
    double global_min;
};

/// v^2 - 2u over [-pi, pi): the local minima are located on `samples` points
/// and refined by golden section; the one at theta = 0 (zeta = 1) is excluded
/// and the smallest remaining one defines b_0 = -(min + 1)/2.  Symmetric ties
/// resolve to negative theta.
inline ParabolaB0 parabola_b0(int samples = 4096) {
    if (samples < 4096) throw std::domain_error("parabola_b0: need at least 4096 samples");
    const double step = 2.0 * kPi / samples;
    std::vector<double> vals(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) vals[static_cast<std::size_t>(i)] = parabola_objective(-kPi + step * i);
    auto at = [&](int i) {
        const double v = vals[static_cast<std::size_t>((i + samples) % samples)];
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    ParabolaB0 out{0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (int i = 0; i < samples; ++i) {
        const double v = at(i);
        if (!std::isfinite(v) || !(v < at(i - 1) && v <= at(i + 1))) continue;
        const double t0 = -kPi + step * i;
        auto m = golden_minimize(parabola_objective, t0 - step, t0 + step);
        if (!(m.value <= v)) m = {t0, v};
        if (m.value < out.global_min) {
            out.global_min = m.value;
            out.global_theta = m.x;
        }
        if (std::abs(m.x) < 1e-3) continue;
        const bool better = m.value < out.min_value - 1e-12 ||
                            (std::abs(m.value - out.min_value) <= 1e-12 && m.x < out.theta_min);
        if (better) {
            out.min_value = m.value;
            out.theta_min = m.x;
        }
    }
    if (!std::isfinite(out.min_value)) throw NumericsError("parabola_b0: no admissible local minimum");
    out.b0 = -(out.min_value + 1.0) / 2.0;
    return out;
}

// ---------------------------------------------------------------------------
// Miscellaneous circle bounds
// ---------------------------------------------------------------------------

struct MiscConstants {
    double k2;               // sech 2
    double conv_sufficient;  // 1/2 + (2 + sinh 1)/cos 1
    double circle_cos_min;   // min |cos e^{i theta}|
    double circle_sin_max;   // max |sin e^{i theta}|
    double logderiv_min;     // min Re(z/(1+z) + z tan z) on |z| = 1
    double logderiv_theta;
};

inline MiscConstants misc_constants(int samples = 4096) {
    auto on_circle = [](double t) { return std::polar(1.0, t); };
    const auto cos_min =
        scan_maximize([&](double t) { return -std::abs(std::cos(on_circle(t))); }, -kPi, kPi, samples, false);
    const auto sin_max = scan_maximize([&](double t) { return std::abs(std::sin(on_circle(t))); }, -kPi, kPi, samples, false);
    // z = -1 is a pole of z/(1+z); samples that land on it are skipped.
    const auto ld = scan_maximize(
        [&](double t) {
            const cplx z = on_circle(t);
            if (std::abs(1.0 + z) < 1e-8) return std::numeric_limits<double>::quiet_NaN();
            return -phi_log_derivative(z).real();
        },
        -kPi, kPi, samples, false);
    return {1.0 / std::cosh(2.0),
            0.5 + (2.0 + std::sinh(1.0)) / std::cos(1.0),
            -cos_min.value,
            sin_max.value,
            -ld.value,
            ld.x};
}

}  // namespace ncstar
