#pragma once

// Caratheodory functions from finite Herglotz measures, the member-synthesis
// pipeline p -> omega -> q = phi(omega) -> f, and the (p1, gamma, eta, rho)
// parametrization of p_2, p_3, p_4.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncstar/extremal.hpp"
#include "ncstar/generator.hpp"
#include "ncstar/series.hpp"

namespace ncstar {

// ---------------------------------------------------------------------------
// Deterministic random source
// ---------------------------------------------------------------------------

/// mt19937_64 with hand-rolled conversions, so a seed reproduces the same
/// draws on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    /// Uniform point of the closed unit disk.
    cplx unit_disk() { return std::polar(std::sqrt(uniform()), uniform(-kPi, kPi)); }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Herglotz measures
// ---------------------------------------------------------------------------

struct Atom {
    double weight;
    double angle;
};

struct HerglotzMeasure {
    std::vector<Atom> atoms;
    std::uint64_t seed = 0;

    void validate() const {
        if (atoms.empty() || atoms.size() > 8) throw std::invalid_argument("HerglotzMeasure: need 1..8 atoms");
        double total = 0.0;
        for (const auto& a : atoms) {
            if (!(a.weight >= 0.0)) throw std::invalid_argument("HerglotzMeasure: negative weight");
            total += a.weight;
        }
        if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("HerglotzMeasure: weights must sum to 1");
    }

    std::string describe() const {
        std::ostringstream os;
        os.precision(17);
        os << "seed=" << seed << " atoms=[";
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            os << (i ? "; " : "") << atoms[i].weight << "@" << atoms[i].angle;
        }
        os << "]";
        return os.str();
    }
};

/// Atom count uniform in [1, max_atoms], angles uniform on [-pi, pi),
/// weights from a flat Dirichlet draw.
inline HerglotzMeasure sample_measure(std::uint64_t seed, int max_atoms) {
    if (max_atoms < 1 || max_atoms > 8) throw std::invalid_argument("sample_measure: max_atoms must lie in [1, 8]");
    Rng rng(seed);
    const int count = rng.integer(1, max_atoms);
    HerglotzMeasure m;
    m.seed = seed;
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
        const double angle = rng.uniform(-kPi, kPi);
        const double w = -std::log1p(-rng.uniform());
        m.atoms.push_back({w, angle});
        total += w;
    }
    if (total <= 0.0) {
        for (auto& a : m.atoms) a.weight = 1.0;
        total = static_cast<double>(count);
    }
    for (auto& a : m.atoms) a.weight /= total;
    // Exact unit mass regardless of rounding.
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < m.atoms.size(); ++i) rest -= m.atoms[i].weight;
    m.atoms.back().weight = rest;
    return m;
}

/// p(z) = sum_k w_k (1 + x_k z)/(1 - x_k z), x_k = e^{-i angle_k}; p_n = 2 sum_k w_k x_k^n.
inline PowerSeries p_series_from_measure(const HerglotzMeasure& m, int order) {
    m.validate();
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
    c[0] = 1.0;
    for (const auto& a : m.atoms) {
        const cplx x = std::polar(1.0, -a.angle);
        cplx xn = 1.0;
        for (int n = 1; n <= order; ++n) {
            xn *= x;
            c[static_cast<std::size_t>(n)] += 2.0 * a.weight * xn;
        }
    }
    return PowerSeries(std::move(c));
}

/// Closed-form p(z) for |z| < 1.
inline cplx caratheodory_eval(const HerglotzMeasure& m, cplx z) {
    cplx p{};
    for (const auto& a : m.atoms) {
        const cplx xz = std::polar(1.0, -a.angle) * z;
        p += a.weight * (1.0 + xz) / (1.0 - xz);
    }
    return p;
}

/// omega = (p - 1)/(p + 1), a Schwarz function.
inline cplx schwarz_eval(const HerglotzMeasure& m, cplx z) {
    const cplx p = caratheodory_eval(m, z);
    return (p - 1.0) / (p + 1.0);
}

/// z f'/f = phi(omega(z)) for the member generated by m, evaluated in closed form.
inline cplx member_log_derivative_eval(const HerglotzMeasure& m, cplx z) { return phi_eval(schwarz_eval(m, z)); }

/// omega = (p-1)/(p+1), q = phi o omega, f = z exp integral (q-1)/t.
inline ClassMember member_from_measure(const HerglotzMeasure& m, int order) {
    const auto p = p_series_from_measure(m, order);
    const auto one = PowerSeries::constant(1.0, order);
    auto omega = (p - one) / (p + one);
    {
        // omega_0 is zero in exact arithmetic; pin it so compose accepts it.
        std::vector<cplx> c(omega.coeffs().begin(), omega.coeffs().end());
        c[0] = 0.0;
        omega = PowerSeries(std::move(c));
    }
    const auto q = compose(phi_series(order), omega);
    return {exp_integral_lift(q), {"herglotz", m.describe()}};
}

// ---------------------------------------------------------------------------
// p_2, p_3, p_4 from (p1, gamma, eta, rho)
// ---------------------------------------------------------------------------

struct LemmaThreePoint {
    double p;   // p_1 in [0, 2]
    cplx gamma;
    cplx eta;
    cplx rho;

    void validate() const {
        constexpr double tol = 1e-12;
        if (!(p >= -tol && p <= 2.0 + tol)) throw std::invalid_argument("LemmaThreePoint: p must lie in [0, 2]");
        if (std::abs(gamma) > 1.0 + tol || std::abs(eta) > 1.0 + tol || std::abs(rho) > 1.0 + tol) {
            throw std::invalid_argument("LemmaThreePoint: gamma, eta, rho must lie in the closed unit disk");
        }
    }
};

struct PTuple {
    cplx p1;
    cplx p2;
    cplx p3;
    cplx p4;
};

/// 2p2 = p^2 + g(4-p^2)
/// 4p3 = p^3 + 2(4-p^2)p g - (4-p^2)p g^2 + 2(4-p^2)(1-|g|^2) e
/// 8p4 = p^4 + (4-p^2) g (p^2(g^2 - 3g + 3) + 4g)
///       - 4(4-p^2)(1-|g|^2)(p(g-1)e + conj(g) e^2 - (1-|e|^2) r)
inline PTuple lemma3_expand(const LemmaThreePoint& pt) {
    pt.validate();
    const double p = pt.p;
    const double q = 4.0 - p * p;
    const cplx g = pt.gamma;
    const cplx e = pt.eta;
    const double sg = 1.0 - std::norm(g);
    const double se = 1.0 - std::norm(e);
    const cplx p2 = (p * p + g * q) / 2.0;
    const cplx p3 = (p * p * p + 2.0 * q * p * g - q * p * g * g + 2.0 * q * sg * e) / 4.0;
    const cplx p4 = (p * p * p * p + q * g * (p * p * (g * g - 3.0 * g + 3.0) + 4.0 * g) -
                     4.0 * q * sg * (p * (g - 1.0) * e + std::conj(g) * e * e - se * pt.rho)) /
                    8.0;
    return {p, p2, p3, p4};
}

/// The p4 formula with the factor (1 - |gamma|^2) in front of rho where the
/// parametrization needs (1 - |eta|^2).  Kept to measure the difference.
inline PTuple lemma3_expand_as_printed(const LemmaThreePoint& pt) {
    auto t = lemma3_expand(pt);
    const double q = 4.0 - pt.p * pt.p;
    const double sg = 1.0 - std::norm(pt.gamma);
    const double se = 1.0 - std::norm(pt.eta);
    // 8p4 differs by -4q sg (se - sg) rho.
    t.p4 += -4.0 * q * sg * (se - sg) * pt.rho / 8.0;
    return t;
}

inline LemmaThreePoint sample_lemma_point(Rng& rng) {
    return {rng.uniform(0.0, 2.0), rng.unit_disk(), rng.unit_disk(), rng.unit_disk()};
}

/// Smallest eigenvalue of the Hermitian Toeplitz matrix with diagonal 2 and
/// super-diagonals p_1..p_{size-1}.
inline double toeplitz_min_eigenvalue(std::span<const cplx> p, int size) {
    if (size < 1 || static_cast<std::size_t>(size) > p.size() + 1) {
        throw std::invalid_argument("toeplitz_min_eigenvalue: size exceeds available coefficients + 1");
    }
    Eigen::MatrixXcd t(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (i == j) t(i, j) = 2.0;
            else if (j > i) t(i, j) = p[static_cast<std::size_t>(j - i - 1)];
            else t(i, j) = std::conj(p[static_cast<std::size_t>(i - j - 1)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

inline constexpr double kPsdFloor = -1e-9;

/// Caratheodory-Toeplitz positivity of the prefix p_1..p_{size-1}.
inline bool toeplitz_psd_check(std::span<const cplx> p, int size) {
    return toeplitz_min_eigenvalue(p, size) >= kPsdFloor;
}

inline std::vector<cplx> as_vector(const PTuple& t) { return {t.p1, t.p2, t.p3, t.p4}; }

struct InitialCoefficients {
    cplx a2;
    cplx a3;
    cplx a4;
    cplx a5;
};

/// a_2..a_5 of the member whose z f'/f = phi((p - 1)/(p + 1)).
inline InitialCoefficients coefficients_from_p(const PTuple& t) {
    const cplx p1 = t.p1;
    const cplx p2 = t.p2;
    const cplx p3 = t.p3;
    const cplx p4 = t.p4;
    return {p1 / 2.0, (p1 * p1 + 4.0 * p2) / 16.0, (p1 * p1 * p1 + 4.0 * p1 * p2 + 16.0 * p3) / 96.0,
            (-p1 * p1 * p1 * p1 + 4.0 * p1 * p1 * p2 + 4.0 * p1 * p3 + 24.0 * p4) / 192.0};
}

}  // namespace ncstar
