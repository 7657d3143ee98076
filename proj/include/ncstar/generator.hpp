#pragma once

// The generating function phi(z) = (1 + z) / cos z, its image domain and the
// primitive g(z) = integral_0^z (1 + t - cos t) / (t cos t) dt.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/numerics.hpp"
#include "ncstar/series.hpp"

namespace ncstar {

inline constexpr double kPi = std::numbers::pi;

/// cos of a complex argument, spelled out as cos x cosh y - i sin x sinh y.
inline cplx cos_c(cplx z) {
    return {std::cos(z.real()) * std::cosh(z.imag()), -std::sin(z.real()) * std::sinh(z.imag())};
}

inline cplx phi_eval(cplx z) { return (1.0 + z) / cos_c(z); }

/// z phi'(z) / phi(z) = z/(1+z) + z tan z.
inline cplx phi_log_derivative(cplx z) { return z / (1.0 + z) + z * std::tan(z); }

inline PowerSeries phi_series(int order) {
    const auto one_plus_z = PowerSeries::constant(1.0, order) + elementary(Elementary::identity, order);
    return one_plus_z * reciprocal(elementary(Elementary::cos, order));
}

/// 2 sec 1, the supremum of Re phi on the disk (equal to 4 cos 1 / (1 + cos 2)).
inline double phi_re_max() { return 2.0 / std::cos(1.0); }

inline double phi_re_max_paper_form() { return 4.0 * std::cos(1.0) / (1.0 + std::cos(2.0)); }

// ---------------------------------------------------------------------------
// Radial real range
// ---------------------------------------------------------------------------

struct RealRange {
    double lower;
    double upper;
    bool verified;          // dense theta-sampling found nothing outside [lower, upper]
    double worst_excess;    // largest amount a sampled Re value left the range by
};

/// Min and max of Re phi on |z| = r, attained at z = -r and z = r.
inline RealRange radial_real_range(double r, int samples = 4096) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radial_real_range: r must lie in [0, 1)");
    RealRange out{(1.0 - r) / std::cos(r), (1.0 + r) / std::cos(r), true, 0.0};
    for (int i = 0; i < samples; ++i) {
        const double theta = -kPi + 2.0 * kPi * i / samples;
        const double re = phi_eval(std::polar(r, theta)).real();
        out.worst_excess = std::max({out.worst_excess, out.lower - re, re - out.upper});
    }
    out.verified = out.worst_excess <= 1e-9;
    return out;
}

// ---------------------------------------------------------------------------
// Boundary samples
// ---------------------------------------------------------------------------

struct CirclePoint {
    double theta;
    cplx w;
};

struct CircleSample {
    double radius;
    std::vector<CirclePoint> points;

    std::size_t count() const noexcept { return points.size(); }
};

/// phi(radius e^{i theta}) on `count` equally spaced theta in [-pi, pi).
inline CircleSample sample_circle(double radius, int count) {
    if (!(radius > 0.0 && radius <= 1.0)) throw std::domain_error("sample_circle: radius must lie in (0, 1]");
    if (count < 3) throw std::domain_error("sample_circle: need at least 3 points");
    CircleSample s{radius, {}};
    s.points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double theta = -kPi + 2.0 * kPi * i / count;
        s.points.push_back({theta, phi_eval(std::polar(radius, theta))});
    }
    return s;
}

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// `theta,re,im` with 17 significant digits.
inline void write_csv(std::ostream& os, const CircleSample& s) {
    os << "theta,re,im\n";
    for (const auto& p : s.points) {
        os << format_g17(p.theta) << ',' << format_g17(p.w.real()) << ',' << format_g17(p.w.imag()) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Global bounds of phi on the closed disk
// ---------------------------------------------------------------------------

struct PhiBounds {
    double re_min;
    double re_max;
    double im_abs_max;  // gamma_0
    double im_abs_max_theta;
    double arg_abs_max;
};

/// The maxima live on the boundary circle; each is located on `samples`
/// points and refined by golden section.
inline PhiBounds phi_global_bounds(int samples = 4096) {
    if (samples < 256) throw std::domain_error("phi_global_bounds: need at least 256 samples");
    auto im_abs = [](double t) { return std::abs(phi_eval(std::polar(1.0, t)).imag()); };
    // Stay off theta = +-pi where phi vanishes and arg is undefined.
    auto arg_abs = [](double t) {
        const cplx w = phi_eval(std::polar(1.0, t));
        return std::abs(w) == 0.0 ? 0.0 : std::abs(std::arg(w));
    };
    const auto im = scan_maximize(im_abs, -kPi, kPi, samples, false);
    const auto arg = scan_maximize(arg_abs, -kPi, kPi, samples, false);
    return {0.0, phi_re_max(), im.value, im.x, arg.value};
}

// ---------------------------------------------------------------------------
// Membership in phi(D) via the winding number of the sampled boundary
// ---------------------------------------------------------------------------

enum class Containment { inside, outside, boundary };

/// Closed polyline through phi(e^{i theta}) with edges bucketed by their
/// imaginary extent, so a query touches only the edges near its height.
class BoundaryPolygon {
public:
    explicit BoundaryPolygon(int samples = 4096, double boundary_tol = 1e-6, int bins = 512)
        : tol_(boundary_tol) {
        if (samples < 1024) throw std::domain_error("BoundaryPolygon: need at least 1024 samples");
        const auto s = sample_circle(1.0, samples);
        vertices_.reserve(s.points.size());
        for (const auto& p : s.points) vertices_.push_back(p.w);
        ymin_ = std::numeric_limits<double>::infinity();
        ymax_ = -ymin_;
        for (const auto& v : vertices_) {
            ymin_ = std::min(ymin_, v.imag());
            ymax_ = std::max(ymax_, v.imag());
        }
        ymin_ -= 2 * tol_;
        ymax_ += 2 * tol_;
        bins_.assign(static_cast<std::size_t>(bins), {});
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const cplx a = vertices_[i];
            const cplx b = vertices_[(i + 1) % n];
            const int lo = bin_of(std::min(a.imag(), b.imag()) - tol_);
            const int hi = bin_of(std::max(a.imag(), b.imag()) + tol_);
            for (int k = lo; k <= hi; ++k) bins_[static_cast<std::size_t>(k)].push_back(i);
        }
    }

    std::size_t size() const noexcept { return vertices_.size(); }
    double boundary_tolerance() const noexcept { return tol_; }

    /// Winding number of the polyline about w (ignores the boundary band).
    int winding_number(cplx w) const {
        if (w.imag() < ymin_ || w.imag() > ymax_) return 0;
        const auto& cand = bins_[static_cast<std::size_t>(bin_of(w.imag()))];
        const std::size_t n = vertices_.size();
        int wn = 0;
        for (std::size_t i : cand) {
            const cplx a = vertices_[i];
            const cplx b = vertices_[(i + 1) % n];
            const double cross = (b.real() - a.real()) * (w.imag() - a.imag()) - (w.real() - a.real()) * (b.imag() - a.imag());
            if (a.imag() <= w.imag()) {
                if (b.imag() > w.imag() && cross > 0.0) ++wn;
            } else if (b.imag() <= w.imag() && cross < 0.0) {
                --wn;
            }
        }
        return wn;
    }

    double distance_to_boundary(cplx w) const {
        if (w.imag() < ymin_ || w.imag() > ymax_) return std::numeric_limits<double>::infinity();
        const auto& cand = bins_[static_cast<std::size_t>(bin_of(w.imag()))];
        const std::size_t n = vertices_.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i : cand) {
            const cplx a = vertices_[i];
            const cplx d = vertices_[(i + 1) % n] - a;
            const double len2 = std::norm(d);
            double t = len2 > 0.0 ? ((w - a) * std::conj(d)).real() / len2 : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            best = std::min(best, std::abs(w - (a + t * d)));
        }
        return best;
    }

    Containment classify(cplx w) const {
        if (distance_to_boundary(w) <= tol_) return Containment::boundary;
        return winding_number(w) == 1 ? Containment::inside : Containment::outside;
    }

    bool contains(cplx w) const { return classify(w) == Containment::inside; }

private:
    int bin_of(double y) const {
        const int nb = static_cast<int>(bins_.size());
        const int k = static_cast<int>(std::floor((y - ymin_) / (ymax_ - ymin_) * nb));
        return std::clamp(k, 0, nb - 1);
    }

    double tol_;
    double ymin_ = 0.0;
    double ymax_ = 0.0;
    std::vector<cplx> vertices_;
    std::vector<std::vector<std::size_t>> bins_;
};

/// True iff the sampled boundary winds once about w and w is not within the
/// boundary band.  Builds a fresh polygon; hold a BoundaryPolygon for repeated queries.
inline bool region_contains(cplx w, int samples = 4096) { return BoundaryPolygon(samples).contains(w); }

// ---------------------------------------------------------------------------
// The primitive g
// ---------------------------------------------------------------------------

/// (phi(t) - 1) / t, with the removable singularity at 0 filled by its limit 1.
inline cplx g_integrand(cplx t) {
    if (t == cplx{}) return 1.0;
    if (std::abs(t) < 1e-4) {
        // 1 + t/2 + t^2/2 + 5t^3/24 avoids cancellation near the origin.
        return 1.0 + t * (0.5 + t * (0.5 + t * (5.0 / 24.0)));
    }
    return (1.0 + t - cos_c(t)) / (t * cos_c(t));
}

/// g(z) by adaptive Simpson along the segment [0, z].
inline cplx g_eval(cplx z, double tol = 1e-10) {
    if (std::abs(z) > 1.0 + 1e-15) throw std::domain_error("g_eval: |z| must be <= 1");
    if (z == cplx{}) return 0.0;
    return adaptive_simpson([z](double s) { return g_integrand(s * z) * z; }, 0.0, 1.0, tol, 40);
}

/// Term-wise integral of (phi - 1)/z: coefficients 0, 1, 1/4, 1/6, 5/96, 1/24, ...
inline PowerSeries g_series(int order) {
    return integrate(shift_down(phi_series(order + 1))).with_order(order);
}

/// Gudermannian gd(x) = integral_0^x sech t dt = 2 atan(tanh(x/2)).
inline double gudermannian(double x) { return 2.0 * std::atan(std::tanh(0.5 * x)); }

}  // namespace ncstar
