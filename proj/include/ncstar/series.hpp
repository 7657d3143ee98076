#pragma once

// Truncated complex power series.
//
// A PowerSeries of order N holds c_0..c_N.  Binary operations demand equal
// orders; nothing is broadcast or silently truncated.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncstar {

using cplx = std::complex<double>;

class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PowerSeries {
public:
    PowerSeries() : coeffs_(1, cplx{0.0, 0.0}) {}

    explicit PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw SeriesError("PowerSeries needs at least one coefficient");
        }
    }

    PowerSeries(std::initializer_list<cplx> coeffs) : PowerSeries(std::vector<cplx>(coeffs)) {}

    static PowerSeries zero(int order) {
        check_order(order);
        return PowerSeries(std::vector<cplx>(static_cast<std::size_t>(order) + 1, cplx{}));
    }

    static PowerSeries constant(cplx c, int order) {
        auto s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// z^k truncated at `order` (zero series when k > order).
    static PowerSeries monomial(int k, int order) {
        auto s = zero(order);
        if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = 1.0;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const cplx& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Coefficient k, or zero past the truncation degree.
    cplx coeff(int k) const noexcept {
        return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : cplx{};
    }

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients, re-truncated (or zero-padded) to `order`.
    PowerSeries with_order(int order) const {
        check_order(order);
        std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
        for (int k = 0; k <= std::min(order, this->order()); ++k) c[static_cast<std::size_t>(k)] = coeff(k);
        return PowerSeries(std::move(c));
    }

    static void check_order(int order) {
        if (order < 0) throw SeriesError("truncation order must be >= 0");
    }

    /// Exact coefficient-wise equality, orders included.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<cplx> coeffs_;
};

namespace detail {

inline void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw SeriesError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()) + ")");
    }
}

inline std::vector<cplx> buffer(int order) {
    return std::vector<cplx>(static_cast<std::size_t>(order) + 1, cplx{});
}

}  // namespace detail

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "add");
    auto c = detail::buffer(a.order());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return PowerSeries(std::move(c));
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "sub");
    auto c = detail::buffer(a.order());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return PowerSeries(std::move(c));
}

inline PowerSeries operator-(const PowerSeries& a) {
    auto c = detail::buffer(a.order());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a[k];
    return PowerSeries(std::move(c));
}

inline PowerSeries scale(const PowerSeries& a, cplx s) {
    auto c = detail::buffer(a.order());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a[k];
    return PowerSeries(std::move(c));
}

inline PowerSeries operator*(cplx s, const PowerSeries& a) { return scale(a, s); }

/// Cauchy product truncated at the common order.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "mul");
    const int n = a.order();
    auto c = detail::buffer(n);
    for (int i = 0; i <= n; ++i) {
        if (a[static_cast<std::size_t>(i)] == cplx{}) continue;
        for (int j = 0; i + j <= n; ++j) {
            c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return PowerSeries(std::move(c));
}

inline PowerSeries mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

inline constexpr double kMinDivisorConstant = 1e-300;

/// Series long division a / b; b_0 must be bounded away from zero.
inline PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "div");
    if (std::abs(b[0]) <= kMinDivisorConstant) {
        throw SeriesError("div: divisor has (near-)zero constant term");
    }
    const int n = a.order();
    auto q = detail::buffer(n);
    for (int k = 0; k <= n; ++k) {
        cplx acc = a[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k; ++j) acc -= b[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc / b[0];
    }
    return PowerSeries(std::move(q));
}

inline PowerSeries div(const PowerSeries& a, const PowerSeries& b) { return a / b; }

inline PowerSeries reciprocal(const PowerSeries& b) { return PowerSeries::constant(1.0, b.order()) / b; }

/// d/dz, keeping the order (top coefficient becomes zero).
inline PowerSeries derivative(const PowerSeries& a) {
    const int n = a.order();
    auto c = detail::buffer(n);
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * a[static_cast<std::size_t>(k + 1)];
    return PowerSeries(std::move(c));
}

/// Term-wise antiderivative with zero constant term, keeping the order
/// (the c_N z^{N+1}/(N+1) term falls off).
inline PowerSeries integrate(const PowerSeries& a) {
    const int n = a.order();
    auto c = detail::buffer(n);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] / static_cast<double>(k);
    return PowerSeries(std::move(c));
}

/// Multiply by z (drops c_N).
inline PowerSeries shift_up(const PowerSeries& a) {
    const int n = a.order();
    auto c = detail::buffer(n);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)];
    return PowerSeries(std::move(c));
}

/// Divide by z; c_0 is discarded and the new top coefficient is zero.
inline PowerSeries shift_down(const PowerSeries& a) {
    const int n = a.order();
    auto c = detail::buffer(n);
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k + 1)];
    return PowerSeries(std::move(c));
}

/// exp of a series, via f' = g' f.  g_0 need not vanish.
inline PowerSeries exp(const PowerSeries& g) {
    const int n = g.order();
    auto f = detail::buffer(n);
    f[0] = std::exp(g[0]);
    for (int k = 1; k <= n; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * g[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
        }
        f[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    return PowerSeries(std::move(f));
}

/// Principal log of a series with nonzero constant term, via f g' = f'.
inline PowerSeries log(const PowerSeries& f) {
    if (std::abs(f[0]) <= kMinDivisorConstant) throw SeriesError("log: zero constant term");
    const int n = f.order();
    auto g = detail::buffer(n);
    g[0] = std::log(f[0]);
    for (int k = 1; k <= n; ++k) {
        cplx acc = static_cast<double>(k) * f[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j) {
            acc -= static_cast<double>(j) * g[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
        }
        g[static_cast<std::size_t>(k)] = acc / (static_cast<double>(k) * f[0]);
    }
    return PowerSeries(std::move(g));
}

/// outer(inner(z)) truncated at the common order.  Requires inner_0 == 0.
inline PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    detail::require_same_order(outer, inner, "compose");
    if (inner[0] != cplx{}) throw SeriesError("compose: inner series must have zero constant term");
    const int n = outer.order();
    // Horner: (((o_N) w + o_{N-1}) w + ...) w + o_0
    auto acc = PowerSeries::zero(n);
    for (int k = n; k >= 0; --k) {
        acc = acc * inner;
        std::vector<cplx> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += outer[static_cast<std::size_t>(k)];
        acc = PowerSeries(std::move(c));
    }
    return acc;
}

/// f(z) = z exp( integral_0^z (q(t) - 1)/t dt ), the normalized function whose
/// logarithmic derivative z f'/f equals q.  Requires q_0 == 1.
inline PowerSeries exp_integral_lift(const PowerSeries& q, double tol = 1e-12) {
    if (std::abs(q[0] - cplx{1.0, 0.0}) > tol) throw SeriesError("exp_integral_lift: q_0 must equal 1");
    const int n = q.order();
    // (q-1)/t has coefficients q_1..q_N; integrating gives q_k/k at z^k.
    auto h = PowerSeries::zero(n);
    {
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
        for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)] / static_cast<double>(k);
        h = PowerSeries(std::move(c));
    }
    return shift_up(exp(h));
}

/// Horner evaluation of the truncated polynomial.
inline cplx evaluate(const PowerSeries& s, cplx z) {
    cplx acc{};
    for (int k = s.order(); k >= 0; --k) acc = acc * z + s[static_cast<std::size_t>(k)];
    return acc;
}

enum class Elementary { cos, sin, exp, geometric, identity };

/// Maclaurin expansion of a named elementary function.
inline PowerSeries elementary(Elementary kind, int order) {
    PowerSeries::check_order(order);
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        const auto idx = static_cast<std::size_t>(k);
        switch (kind) {
            case Elementary::cos:
                if (k % 2 == 0) c[idx] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
                break;
            case Elementary::sin:
                if (k % 2 == 1) c[idx] = (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
                break;
            case Elementary::exp: c[idx] = 1.0 / fact; break;
            case Elementary::geometric: c[idx] = 1.0; break;
            case Elementary::identity: c[idx] = (k == 1) ? 1.0 : 0.0; break;
        }
    }
    return PowerSeries(std::move(c));
}

inline double max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace ncstar
