#pragma once

// Class members f(z) = z + a_2 z^2 + ..., the extremal functions f_n with
// z f_n'/f_n = phi(z^{n-1}), and the growth, distortion and rotation
// envelopes generated by f_2.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/generator.hpp"
#include "ncstar/numerics.hpp"
#include "ncstar/series.hpp"

namespace ncstar {

struct Provenance {
    std::string kind;    // "extremal", "herglotz", "manual"
    std::string detail;  // e.g. "n=2" or the measure atoms
};

/// Normalized analytic function given by its Taylor coefficients (c_0 = 0, c_1 = 1).
class ClassMember {
public:
    ClassMember(PowerSeries coeffs, Provenance provenance) : coeffs_(std::move(coeffs)), provenance_(std::move(provenance)) {
        if (coeffs_.order() < 1) throw std::invalid_argument("ClassMember: order must be >= 1");
        if (std::abs(coeffs_[0]) > 1e-12 || std::abs(coeffs_[1] - cplx{1.0, 0.0}) > 1e-12) {
            throw std::invalid_argument("ClassMember: coefficients must start 0, 1");
        }
        std::vector<cplx> c(coeffs_.coeffs().begin(), coeffs_.coeffs().end());
        c[0] = 0.0;
        c[1] = 1.0;
        coeffs_ = PowerSeries(std::move(c));
    }

    static ClassMember identity(int order) {
        return {elementary(Elementary::identity, order), {"manual", "identity"}};
    }

    const PowerSeries& series() const noexcept { return coeffs_; }
    const Provenance& provenance() const noexcept { return provenance_; }
    int order() const noexcept { return coeffs_.order(); }

    /// a_n (zero past the truncation order).
    cplx a(int n) const noexcept { return coeffs_.coeff(n); }

    /// z f'(z) / f(z) = f'(z) / (f(z)/z).  Only coefficients through order-1
    /// are determined by a_1..a_N, so the result has order N-1.
    PowerSeries log_derivative() const {
        const int m = order() - 1;
        return derivative(coeffs_).with_order(m) / shift_down(coeffs_).with_order(m);
    }

private:
    PowerSeries coeffs_;
    Provenance provenance_;
};

/// Coefficients of f_n through the recurrence (k-1) a_k = sum_{j<k} q_{k-j} a_j
/// with q = phi(z^{n-1}).
inline ClassMember build_extremal(int n, int order) {
    if (n < 2) throw std::invalid_argument("build_extremal: n must be >= 2");
    if (order < n) throw std::invalid_argument("build_extremal: order must be >= n");
    const int step = n - 1;
    const auto phi = phi_series(order);
    auto q = [&](int k) -> cplx { return (k % step == 0) ? phi[static_cast<std::size_t>(k / step)] : cplx{}; };
    std::vector<cplx> a(static_cast<std::size_t>(order) + 1, cplx{});
    a[1] = 1.0;
    for (int k = 2; k <= order; ++k) {
        cplx acc{};
        for (int j = 1; j < k; ++j) acc += q(k - j) * a[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(k)] = acc / static_cast<double>(k - 1);
    }
    return {PowerSeries(std::move(a)), {"extremal", "n=" + std::to_string(n)}};
}

/// The same f_n through exp_integral_lift(phi o z^{n-1}).
inline ClassMember build_extremal_by_lift(int n, int order) {
    if (n < 2) throw std::invalid_argument("build_extremal_by_lift: n must be >= 2");
    const auto q = compose(phi_series(order), PowerSeries::monomial(n - 1, order));
    return {exp_integral_lift(q), {"extremal", "n=" + std::to_string(n) + " (lift)"}};
}

// ---------------------------------------------------------------------------
// Envelopes of f~ = f_2
// ---------------------------------------------------------------------------

inline constexpr int kEnvelopeOrder = 64;
inline constexpr int kEnvelopeCheckOrder = 48;

struct Envelope {
    double lower;
    double upper;
    double tail_estimate;  // |value at order 64 - value at order 48|, worst of both ends
};

namespace detail {

inline void check_radius(double r, const char* who) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error(std::string(who) + ": r must lie in [0, 1)");
}

inline const PowerSeries& extremal_series_at(int order) {
    static const PowerSeries high = build_extremal(2, kEnvelopeOrder).series();
    static const PowerSeries check = high.with_order(kEnvelopeCheckOrder);
    return order == kEnvelopeOrder ? high : check;
}

inline Envelope envelope_from(const PowerSeries& hi, const PowerSeries& lo, double r) {
    const double up = evaluate(hi, r).real();
    const double dn = evaluate(hi, -r).real();
    const double tail = std::max(std::abs(up - evaluate(lo, r).real()), std::abs(dn - evaluate(lo, -r).real()));
    return {dn, up, tail};
}

}  // namespace detail

/// (-f~(-r), f~(r)): bounds on |f(z)| over |z| = r.
inline Envelope growth_envelope(double r) {
    detail::check_radius(r, "growth_envelope");
    const auto& hi = detail::extremal_series_at(kEnvelopeOrder);
    const auto& lo = detail::extremal_series_at(kEnvelopeCheckOrder);
    auto e = detail::envelope_from(hi, lo, r);
    e.lower = -e.lower;
    return e;
}

/// (f~'(-r), f~'(r)): bounds on |f'(z)| over |z| = r.
inline Envelope distortion_envelope(double r) {
    detail::check_radius(r, "distortion_envelope");
    const auto hi = derivative(detail::extremal_series_at(kEnvelopeOrder));
    const auto lo = derivative(detail::extremal_series_at(kEnvelopeCheckOrder));
    return detail::envelope_from(hi, lo, r);
}

/// max over |z| = r of |arg(f~(z)/z)|.
inline double rotation_bound(double r, int samples = 4096) {
    detail::check_radius(r, "rotation_bound");
    if (samples < 256) throw std::domain_error("rotation_bound: need at least 256 samples");
    if (r == 0.0) return 0.0;
    const auto f_over_z = shift_down(detail::extremal_series_at(kEnvelopeOrder));
    auto arg_abs = [&](double t) { return std::abs(std::arg(evaluate(f_over_z, std::polar(r, t)))); };
    return scan_maximize(arg_abs, -kPi, kPi, samples, false).value;
}

}  // namespace ncstar
