#pragma once

// Objective functions that dominate |H_2(2)| and |H_3(1)| after the
// (p1, gamma, eta, rho) substitution, their face and edge restrictions, and
// a grid + Nelder-Mead maximizer over the box [0,2] x [0,1] x [0,1].

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncstar/numerics.hpp"

namespace ncstar {

/// (p, x, y) with p = p_1, x = |gamma|, y = |eta|.  Two-variable objectives
/// use the leading coordinates they declare.
struct BoxPoint {
    double p = 0.0;
    double x = 0.0;
    double y = 0.0;

    void validate() const {
        constexpr double tol = 1e-12;
        if (!(p >= -tol && p <= 2.0 + tol && x >= -tol && x <= 1.0 + tol && y >= -tol && y <= 1.0 + tol)) {
            throw std::domain_error("BoxPoint outside [0,2] x [0,1] x [0,1]");
        }
    }

    friend bool operator<(const BoxPoint& a, const BoxPoint& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// ---------------------------------------------------------------------------
// H_2(2)
// ---------------------------------------------------------------------------

/// (1/768)(p^4 + 12p^2(4-p^2) rho + (28p^4 + 32p^3 - 96p^2 - 128p + 192) rho^2 + 32p(4-p^2)).
inline double eval_g_h2(double p, double rho) {
    BoxPoint{p, rho, 0.0}.validate();
    const double q = 4.0 - p * p;
    const double p2 = p * p;
    return (p2 * p2 + 12.0 * p2 * q * rho + (28.0 * p2 * p2 + 32.0 * p2 * p - 96.0 * p2 - 128.0 * p + 192.0) * rho * rho +
            32.0 * p * q) /
           768.0;
}

/// G(p, 1) = (192 - 48p^2 + 17p^4)/768.
inline double eval_g_h2_reduced(double p) {
    BoxPoint{p, 0.0, 0.0}.validate();
    return (192.0 - 48.0 * p * p + 17.0 * p * p * p * p) / 768.0;
}

// ---------------------------------------------------------------------------
// H_3(1)
// ---------------------------------------------------------------------------

struct GH3Terms {
    double g1;
    double g2;
    double g3;
    double g4;
};

inline GH3Terms g_h3_terms(double p, double x, double y) {
    const double q = 4.0 - p * p;
    const double p2 = p * p;
    const double p3 = p2 * p;
    const double p4 = p2 * p2;
    const double p6 = p4 * p2;
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double x4 = x2 * x2;
    GH3Terms t{};
    t.g1 = 5.0 * p6 + 26.0 * p4 * q * x + 144.0 * p2 * q * x2 + 56.0 * p4 * q * x2 + 68.0 * p2 * q * q * x2 +
           36.0 * p4 * q * x3 + 40.0 * p2 * q * q * x3 + 8.0 * p2 * q * q * x4;
    t.g2 = q * (1.0 - x2) * (40.0 * p3 + 144.0 * p3 * x + 80.0 * p * q * x + 32.0 * p * q * x2);
    t.g3 = q * (1.0 - x2) * (256.0 * q + 32.0 * q * x2 + 144.0 * p2 * x);
    t.g4 = q * (1.0 - y * y) * (144.0 * p2 + 288.0 * q * x) * (1.0 - x2);
    return t;
}

/// G(p, x, y) = (g1 + g2 y + g3 y^2 + g4)/36864.
inline double eval_g_h3(const BoxPoint& pt) {
    pt.validate();
    const auto t = g_h3_terms(pt.p, pt.x, pt.y);
    return (t.g1 + t.g2 * pt.y + t.g3 * pt.y * pt.y + t.g4) / 36864.0;
}

// Face restrictions, written out independently of eval_g_h3.

/// p = 0: (1/72)(1 - x^2)(x^2 y^2 - 9x(y^2 - 1) + 8y^2).
inline double h1(double x, double y) { return (1.0 - x * x) * (x * x * y * y - 9.0 * x * (y * y - 1.0) + 8.0 * y * y) / 72.0; }

/// x = 0.
inline double h2(double p, double y) {
    const double q = 4.0 - p * p;
    return (5.0 * std::pow(p, 6) + 144.0 * q * p * p * (1.0 - y * y) + 256.0 * q * q * y * y + 40.0 * q * p * p * p * y) /
           36864.0;
}

/// x = 1 (independent of y).
inline double h3(double p) {
    const double q = 4.0 - p * p;
    return (5.0 * std::pow(p, 6) + 144.0 * p * p * q + 118.0 * std::pow(p, 4) * q + 116.0 * p * p * q * q) / 36864.0;
}

/// Edges of the cuboid: k1 = G(p,0,0), k2 = G(p,0,1), k3 = G(p,1,.) = h3,
/// k4 = G(0,0,y), k5 = G(0,x,1), k6 = G(0,x,0).
inline double k1(double p) { return (5.0 * std::pow(p, 6) + 144.0 * (4.0 - p * p) * p * p) / 36864.0; }
inline double k2(double p) {
    const double q = 4.0 - p * p;
    return (5.0 * std::pow(p, 6) + 256.0 * q * q + 40.0 * q * p * p * p) / 36864.0;
}
inline double k3(double p) { return h3(p); }
inline double k4(double y) { return y * y / 9.0; }
inline double k5(double x) { return (1.0 - x * x) * (x * x + 8.0) / 72.0; }
inline double k6(double x) { return x * (1.0 - x * x) / 8.0; }

/// Stationary points quoted for the edge and face maxima.
struct QuotedMaxima {
    static double k1_argmax() { return 2.0 * std::sqrt(2.0 * (6.0 - std::sqrt(21.0)) / 5.0); }
    static double k1_max() { return (7.0 * std::sqrt(21.0) - 27.0) / 300.0; }
    static double k6_argmax() { return 1.0 / std::sqrt(3.0); }
    static double k6_max() { return 1.0 / (12.0 * std::sqrt(3.0)); }
    static double h3_argmax() { return 2.0 * std::sqrt(2.0 * (25.0 - std::sqrt(587.0)) / 3.0); }
    static double h3_max() { return (587.0 * std::sqrt(587.0) - 14200.0) / 324.0; }
};

// ---------------------------------------------------------------------------
// Named objectives and the box maximizer
// ---------------------------------------------------------------------------

/// Which coordinates an objective varies; the rest are pinned at 0.
enum class Axes { p, x, y, px, py, xy, pxy };

struct Objective {
    std::string name;
    Axes axes;
    std::function<double(const BoxPoint&)> f;
};

inline const std::vector<Objective>& objectives() {
    static const std::vector<Objective> all{
        {"g_h3", Axes::pxy, [](const BoxPoint& b) { return eval_g_h3(b); }},
        {"g_h2", Axes::px, [](const BoxPoint& b) { return eval_g_h2(b.p, b.x); }},
        {"g_h2_reduced", Axes::p, [](const BoxPoint& b) { return eval_g_h2_reduced(b.p); }},
        {"h1", Axes::xy, [](const BoxPoint& b) { return h1(b.x, b.y); }},
        {"h2", Axes::py, [](const BoxPoint& b) { return h2(b.p, b.y); }},
        {"h3", Axes::p, [](const BoxPoint& b) { return h3(b.p); }},
        {"h4", Axes::px, [](const BoxPoint& b) { return eval_g_h3({b.p, b.x, 0.0}); }},
        {"h5", Axes::px, [](const BoxPoint& b) { return eval_g_h3({b.p, b.x, 1.0}); }},
        {"k1", Axes::p, [](const BoxPoint& b) { return k1(b.p); }},
        {"k2", Axes::p, [](const BoxPoint& b) { return k2(b.p); }},
        {"k3", Axes::p, [](const BoxPoint& b) { return k3(b.p); }},
        {"k4", Axes::y, [](const BoxPoint& b) { return k4(b.y); }},
        {"k5", Axes::x, [](const BoxPoint& b) { return k5(b.x); }},
        {"k6", Axes::x, [](const BoxPoint& b) { return k6(b.x); }},
    };
    return all;
}

inline const Objective& find_objective(std::string_view name) {
    for (const auto& o : objectives()) {
        if (o.name == name) return o;
    }
    throw std::invalid_argument("unknown objective: " + std::string(name));
}

struct BoxMaximum {
    std::string objective;
    BoxPoint argmax;
    double value;
    double grid_value;  // best value on the grid before refinement
    int grid;
    bool refined;       // Nelder-Mead improved on the grid value
};

namespace detail {

inline bool axis_active(Axes a, int axis) {
    switch (a) {
        case Axes::p: return axis == 0;
        case Axes::x: return axis == 1;
        case Axes::y: return axis == 2;
        case Axes::px: return axis != 2;
        case Axes::py: return axis != 1;
        case Axes::xy: return axis != 0;
        case Axes::pxy: return true;
    }
    return false;
}

inline int active_count(Axes a) {
    int n = 0;
    for (int i = 0; i < 3; ++i) n += axis_active(a, i) ? 1 : 0;
    return n;
}

}  // namespace detail

/// Dense grid scan then Nelder-Mead from the 10 best nodes, clipped to the box.
/// Grid sizes: `grid` nodes along p and (grid-1)/2 + 1 along x and y for
/// multivariate objectives; 10 (grid-1) + 1 nodes for univariate ones.
/// Ties go to the lexicographically smallest point.
inline BoxMaximum maximize_box(std::string_view name, int grid = 201, int refine_iters = 2000) {
    if (grid < 51) throw std::invalid_argument("maximize_box: grid must be >= 51");
    const Objective& obj = find_objective(name);
    const int dims = detail::active_count(obj.axes);
    const std::array<double, 3> hi{2.0, 1.0, 1.0};
    std::array<int, 3> nodes{1, 1, 1};
    for (int a = 0; a < 3; ++a) {
        if (!detail::axis_active(obj.axes, a)) continue;
        if (dims == 1) nodes[static_cast<std::size_t>(a)] = 10 * (grid - 1) + 1;
        else nodes[static_cast<std::size_t>(a)] = a == 0 ? grid : (grid - 1) / 2 + 1;
    }
    auto coord = [&](int a, int i) {
        const int n = nodes[static_cast<std::size_t>(a)];
        return n == 1 ? 0.0 : hi[static_cast<std::size_t>(a)] * i / (n - 1);
    };

    struct Node {
        double value;
        BoxPoint pt;
    };
    auto better = [](const Node& a, const Node& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.pt < b.pt;
    };
    constexpr std::size_t kSeeds = 10;
    std::vector<Node> top;
    for (int i = 0; i < nodes[0]; ++i) {
        for (int j = 0; j < nodes[1]; ++j) {
            for (int k = 0; k < nodes[2]; ++k) {
                const BoxPoint pt{coord(0, i), coord(1, j), coord(2, k)};
                Node n{obj.f(pt), pt};
                if (top.size() < kSeeds || better(n, top.back())) {
                    top.push_back(n);
                    std::sort(top.begin(), top.end(), better);
                    if (top.size() > kSeeds) top.pop_back();
                }
            }
        }
    }
    Node best = top.front();
    const double grid_value = best.value;

    // Map the active axes onto a D-dimensional Nelder-Mead problem.
    std::vector<int> active;
    for (int a = 0; a < 3; ++a)
        if (detail::axis_active(obj.axes, a)) active.push_back(a);
    auto lift = [&](const auto& v) {
        BoxPoint pt{};
        std::array<double*, 3> slot{&pt.p, &pt.x, &pt.y};
        for (std::size_t i = 0; i < active.size(); ++i) *slot[static_cast<std::size_t>(active[i])] = v[i];
        return pt;
    };
    auto refine_from = [&]<std::size_t D>(const BoxPoint& start) {
        Box<D> box{};
        Point<D> x0{};
        const std::array<double, 3> s{start.p, start.x, start.y};
        for (std::size_t i = 0; i < D; ++i) {
            box.lo[i] = 0.0;
            box.hi[i] = hi[static_cast<std::size_t>(active[i])];
            x0[i] = s[static_cast<std::size_t>(active[i])];
        }
        auto r = nelder_mead_maximize<D>([&](const Point<D>& v) { return obj.f(lift(v)); }, box, x0, 0.01, refine_iters);
        return Node{r.value, lift(r.x)};
    };
    bool refined = false;
    for (const auto& seed : top) {
        Node cand{};
        switch (dims) {
            case 1: cand = refine_from.template operator()<1>(seed.pt); break;
            case 2: cand = refine_from.template operator()<2>(seed.pt); break;
            default: cand = refine_from.template operator()<3>(seed.pt); break;
        }
        if (cand.value > best.value) {
            best = cand;
            refined = true;
        }
    }
    return {obj.name, best.pt, best.value, grid_value, grid, refined};
}

}  // namespace ncstar
