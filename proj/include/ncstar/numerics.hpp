#pragma once

// Scalar numerical kernels shared by the verification modules: adaptive
// Simpson quadrature, golden-section search, bracketed root polishing and a
// box-clipped Nelder-Mead.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncstar {

class NumericsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Adaptive Simpson
// ---------------------------------------------------------------------------

namespace detail {

template <typename F, typename T>
T simpson_recurse(F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth, int max_depth,
                  bool& converged) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol && depth >= 4) return left + right + delta / 15.0;
    if (depth >= max_depth) {
        converged = false;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth, converged) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth, converged);
}

}  // namespace detail

/// Adaptive Simpson on [a, b] for real- or complex-valued integrands.
/// Throws NumericsError when the recursion bottoms out at `max_depth`.
template <typename F>
auto adaptive_simpson(F&& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
    using T = decltype(f(a));
    const double m = 0.5 * (a + b);
    const T fa = f(a);
    const T fm = f(m);
    const T fb = f(b);
    const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    bool converged = true;
    T result = detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 0, max_depth, converged);
    if (!converged) throw NumericsError("adaptive_simpson: no convergence at max depth");
    return result;
}

// ---------------------------------------------------------------------------
// Golden-section search
// ---------------------------------------------------------------------------

struct Extremum {
    double x;
    double value;
};

/// Maximizes a unimodal f on [lo, hi] until the interval is narrower than `width`.
template <typename F>
Extremum golden_maximize(F&& f, double lo, double hi, double width = 1e-12) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 300 && (b - a) > width; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    Extremum best{c, fc};
    if (fd > best.value) best = {d, fd};
    for (double x : {lo, hi}) {
        if (x >= a && x <= b) {
            const double fx = f(x);
            if (fx > best.value) best = {x, fx};
        }
    }
    return best;
}

template <typename F>
Extremum golden_minimize(F&& f, double lo, double hi, double width = 1e-12) {
    auto r = golden_maximize([&](double x) { return -f(x); }, lo, hi, width);
    return {r.x, -r.value};
}

/// Dense scan of f on `samples` uniform points of [lo, hi) (or [lo, hi] when
/// `closed`), followed by golden refinement on the two neighbouring cells of
/// the best sample.  Non-finite samples are skipped.  Ties keep the smallest x.
template <typename F>
Extremum scan_maximize(F&& f, double lo, double hi, int samples, bool closed = true, double width = 1e-12) {
    if (samples < 2) throw NumericsError("scan_maximize: need at least 2 samples");
    const double step = (hi - lo) / static_cast<double>(closed ? samples - 1 : samples);
    int best_i = -1;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double v = f(lo + step * i);
        if (std::isfinite(v) && v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    if (best_i < 0) throw NumericsError("scan_maximize: objective not finite anywhere");
    const double x0 = lo + step * best_i;
    const double a = std::max(lo, x0 - step);
    const double b = std::min(hi, x0 + step);
    auto refined = golden_maximize(f, a, b, width);
    if (!std::isfinite(refined.value) || refined.value < best_v) return {x0, best_v};
    return refined;
}

// ---------------------------------------------------------------------------
// Bracketed root finding: bisection to a tight bracket, then Newton polish
// ---------------------------------------------------------------------------

struct BracketedRoot {
    double x;
    double residual;
    double lo;
    double hi;
    int iterations;
};

/// Requires f(lo) and f(hi) of opposite sign (or one of them zero).
/// `df` is used for the Newton polish; steps leaving the bracket are rejected.
template <typename F, typename DF>
BracketedRoot bisect_newton(F&& f, DF&& df, double lo, double hi, double xtol = 1e-15, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, lo, hi, 0};
    if (fhi == 0.0) return {hi, 0.0, lo, hi, 0};
    if ((flo < 0.0) == (fhi < 0.0)) throw NumericsError("bisect_newton: no sign change on bracket");
    const double bracket_lo = lo;
    const double bracket_hi = hi;
    int it = 0;
    while (hi - lo > 1e-6 && it < max_iter) {
        const double m = 0.5 * (lo + hi);
        const double fm = f(m);
        ++it;
        if (fm == 0.0) return {m, 0.0, bracket_lo, bracket_hi, it};
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = m;
            flo = fm;
        } else {
            hi = m;
        }
    }
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    while (it < max_iter) {
        ++it;
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double fn = f(next);
        if ((fn < 0.0) == (flo < 0.0)) {
            lo = next;
            flo = fn;
        } else {
            hi = next;
        }
        const bool done = std::abs(next - x) <= xtol * std::max(1.0, std::abs(next)) || fn == 0.0;
        x = next;
        fx = fn;
        if (done || hi - lo <= xtol) break;
    }
    // Endpoints of the final bracket may beat the Newton iterate.
    for (double cand : {lo, hi}) {
        const double fc = f(cand);
        if (std::abs(fc) < std::abs(fx)) {
            x = cand;
            fx = fc;
        }
    }
    return {x, std::abs(fx), bracket_lo, bracket_hi, it};
}

// ---------------------------------------------------------------------------
// Nelder-Mead (maximization) with clipping to a box
// ---------------------------------------------------------------------------

template <std::size_t D>
using Point = std::array<double, D>;

template <std::size_t D>
struct Box {
    Point<D> lo;
    Point<D> hi;

    Point<D> clip(Point<D> x) const {
        for (std::size_t i = 0; i < D; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
        return x;
    }
};

template <std::size_t D>
struct SimplexResult {
    Point<D> x;
    double value;
    int iterations;
};

template <std::size_t D, typename F>
SimplexResult<D> nelder_mead_maximize(F&& f, const Box<D>& box, Point<D> start, double initial_step, int max_iter,
                                      double ftol = 1e-15) {
    std::array<Point<D>, D + 1> simplex{};
    std::array<double, D + 1> vals{};
    simplex[0] = box.clip(start);
    for (std::size_t i = 0; i < D; ++i) {
        Point<D> p = simplex[0];
        const double span = box.hi[i] - box.lo[i];
        double step = initial_step * span;
        if (p[i] + step > box.hi[i]) step = -step;
        p[i] += step;
        simplex[i + 1] = box.clip(p);
    }
    for (std::size_t i = 0; i <= D; ++i) vals[i] = f(simplex[i]);

    auto order = [&] {
        std::array<std::size_t, D + 1> idx{};
        for (std::size_t i = 0; i <= D; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        auto s2 = simplex;
        auto v2 = vals;
        for (std::size_t i = 0; i <= D; ++i) {
            simplex[i] = s2[idx[i]];
            vals[i] = v2[idx[i]];
        }
    };

    int it = 0;
    for (; it < max_iter; ++it) {
        order();
        if (std::abs(vals[0] - vals[D]) <= ftol * (1.0 + std::abs(vals[0]))) break;
        Point<D> centroid{};
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t k = 0; k < D; ++k) centroid[k] += simplex[i][k] / static_cast<double>(D);
        auto along = [&](double t) {
            Point<D> p{};
            for (std::size_t k = 0; k < D; ++k) p[k] = centroid[k] + t * (simplex[D][k] - centroid[k]);
            return box.clip(p);
        };
        const Point<D> xr = along(-1.0);
        const double fr = f(xr);
        if (fr > vals[0]) {
            const Point<D> xe = along(-2.0);
            const double fe = f(xe);
            if (fe > fr) {
                simplex[D] = xe;
                vals[D] = fe;
            } else {
                simplex[D] = xr;
                vals[D] = fr;
            }
        } else if (fr > vals[D - 1]) {
            simplex[D] = xr;
            vals[D] = fr;
        } else {
            const bool outside = fr > vals[D];
            const Point<D> xc = along(outside ? -0.5 : 0.5);
            const double fc = f(xc);
            if (fc > std::max(fr, vals[D])) {
                simplex[D] = xc;
                vals[D] = fc;
            } else {
                for (std::size_t i = 1; i <= D; ++i) {
                    for (std::size_t k = 0; k < D; ++k) simplex[i][k] = 0.5 * (simplex[0][k] + simplex[i][k]);
                    simplex[i] = box.clip(simplex[i]);
                    vals[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return {simplex[0], vals[0], it};
}

/// Central finite difference.
template <typename F>
double central_derivative(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace ncstar
