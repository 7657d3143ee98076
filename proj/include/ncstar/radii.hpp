#pragma once

// Radius problems (starlike of order alpha, the mu-beta inclusion, convexity
// of order alpha, M-starlikeness) and the inclusion constants for k-ST and
// the parabolic class ST_p(a).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ncstar/generator.hpp"
#include "ncstar/numerics.hpp"

namespace ncstar {

enum class RadiusKind { starlike_order, mu_beta, convexity, m_starlike };

inline std::string_view to_string(RadiusKind k) {
    switch (k) {
        case RadiusKind::starlike_order: return "starlike_order";
        case RadiusKind::mu_beta: return "mu_beta";
        case RadiusKind::convexity: return "convexity";
        case RadiusKind::m_starlike: return "m_starlike";
    }
    return "?";
}

inline RadiusKind parse_radius_kind(std::string_view s) {
    for (auto k : {RadiusKind::starlike_order, RadiusKind::mu_beta, RadiusKind::convexity, RadiusKind::m_starlike}) {
        if (to_string(k) == s) return k;
    }
    throw std::invalid_argument("unknown radius kind: " + std::string(s));
}

struct RootResult {
    double r;
    double residual;
    std::pair<double, double> bracket;
    int iterations;
    bool saturated;  // r = 1 returned by the piecewise rule, not as a root
};

/// The defining equation F(r) = 0 and its derivative for each radius problem.
struct RadiusEquation {
    RadiusKind kind;
    double param;

    double operator()(double r) const {
        switch (kind) {
            case RadiusKind::starlike_order: return (1.0 - r) - param * std::cos(r);
            case RadiusKind::mu_beta: return 1.0 + r - param * std::cos(r);
            case RadiusKind::convexity:
                return (1.0 - r) * (1.0 - r) - (r + param * (1.0 - r)) * std::cos(r) - r * (1.0 - r) * std::sin(r);
            case RadiusKind::m_starlike: return 1.0 - r - 2.0 * param * std::cos(r);
        }
        return 0.0;
    }

    double derivative(double r) const {
        switch (kind) {
            case RadiusKind::starlike_order: return -1.0 + param * std::sin(r);
            case RadiusKind::mu_beta: return 1.0 + param * std::sin(r);
            case RadiusKind::convexity:
                return -2.0 * (1.0 - r) - (1.0 - param) * std::cos(r) + (r + param * (1.0 - r)) * std::sin(r) -
                       (1.0 - 2.0 * r) * std::sin(r) - r * (1.0 - r) * std::cos(r);
            case RadiusKind::m_starlike: return -1.0 + 2.0 * param * std::sin(r);
        }
        return 0.0;
    }
};

inline void validate_radius_param(RadiusKind kind, double param) {
    const bool ok = [&] {
        switch (kind) {
            case RadiusKind::starlike_order:
            case RadiusKind::convexity: return param >= 0.0 && param < 1.0;
            case RadiusKind::mu_beta: return param > 1.0;
            case RadiusKind::m_starlike: return param > 0.0;
        }
        return false;
    }();
    if (!ok) throw std::domain_error("solve_radius: parameter out of range for " + std::string(to_string(kind)));
}

/// Root of the radius equation on [0, 1] by bisection + Newton.
/// mu_beta returns r = 1 once beta >= 2 sec 1; m_starlike returns r = 1 once
/// M >= 1/2, where (1 - r)/cos r < 2M holds on the whole disk.
inline RootResult solve_radius(RadiusKind kind, double param) {
    validate_radius_param(kind, param);
    const RadiusEquation eq{kind, param};
    if ((kind == RadiusKind::mu_beta && param >= phi_re_max()) || (kind == RadiusKind::m_starlike && param >= 0.5)) {
        return {1.0, 0.0, {0.0, 1.0}, 0, true};
    }
    const double f0 = eq(0.0);
    const double f1 = eq(1.0);
    if (f0 != 0.0 && f1 != 0.0 && (f0 < 0.0) == (f1 < 0.0)) {
        throw NumericsError("solve_radius: no sign change on [0, 1] (F(0) = " + format_g17(f0) +
                            ", F(1) = " + format_g17(f1) + ")");
    }
    const auto root = bisect_newton(eq, [&](double r) { return eq.derivative(r); }, 0.0, 1.0);
    return {root.x, root.residual, {root.lo, root.hi}, root.iterations, false};
}

// ---------------------------------------------------------------------------
// Inclusion constants
// ---------------------------------------------------------------------------

struct EllipseParams {
    double x0;
    double u;
    double v;
};

/// Boundary of Re w > k|w - 1| for k > 1: centre x0, semi-axes u (real) and v.
inline EllipseParams kst_ellipse(double k) {
    if (!(k > 1.0)) throw std::domain_error("kst_ellipse: k must exceed 1");
    const double d = k * k - 1.0;
    return {k * k / d, k / d, 1.0 / std::sqrt(d)};
}

struct InclusionConstants {
    double kst_threshold;      // 4 cos 1/(4 cos 1 - cos 2 - 1)
    double mu_beta_threshold;  // 2 sec 1
    EllipseParams at_threshold;
};

inline InclusionConstants inclusion_constants() {
    const double c1 = std::cos(1.0);
    const double k = 4.0 * c1 / (4.0 * c1 - std::cos(2.0) - 1.0);
    return {k, phi_re_max(), kst_ellipse(k)};
}

/// T(theta) from the ST_p(a) inclusion: Re w + a > |w - a| on w = phi(e^{i theta})
/// becomes T(theta) < a.  Undefined (0/0) at theta = +-pi.
inline double stp_t(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double num = (c + 1.0) * std::sinh(s) * std::sin(c) + s * std::cos(c) * std::cosh(s);
    const double den = 2.0 * (std::cos(2.0 * c) + std::cosh(2.0 * s)) *
                       ((c + 1.0) * std::cos(c) * std::cosh(s) - s * std::sinh(s) * std::sin(c));
    return num * num / den;
}

struct StpConstant {
    double theta0;
    double a0;
};

/// max of T on [lo, hi] by a `samples`-point scan and golden refinement.
inline StpConstant stp_constant(int samples = 4096, double lo = 0.0, double hi = kPi) {
    if (samples < 1024) throw std::domain_error("stp_constant: need at least 1024 samples");
    const auto m = scan_maximize(stp_t, lo, hi, samples, true);
    return {m.x, m.value};
}

}  // namespace ncstar
