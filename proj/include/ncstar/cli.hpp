#pragma once

// Command-line front end.  run_command parses an argument vector, runs one
// subcommand and returns its exit code together with what it would print:
//   0  success
//   1  internal numerical failure
//   2  usage error (unknown subcommand, malformed flag, parameter out of range)
//   3  verification failure (a checked bound or a --strict comparison fails)
// Output is JSON unless --csv is given; diagnostics go to the error stream.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncstar/caratheodory.hpp"
#include "ncstar/extremal.hpp"
#include "ncstar/functionals.hpp"
#include "ncstar/generator.hpp"
#include "ncstar/proofsurface.hpp"
#include "ncstar/radii.hpp"
#include "ncstar/report.hpp"
#include "ncstar/subordconst.hpp"

namespace ncstar {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

struct GlobalOptions {
    int order = 16;
    std::uint64_t seed = 0xC0FFEE;
    int samples = -1;  // per-command default when negative
    bool csv = false;
    double tolerance = 1e-9;

    int samples_or(int fallback) const { return samples < 0 ? fallback : samples; }
};

namespace cli_detail {

/// Thrown by a command to report a failed verification with exit code 3.
struct VerificationFailure {
    std::string what;
};

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

inline ojson series_json(const PowerSeries& s) {
    ojson a = ojson::array();
    for (const auto& c : s.coeffs()) a.push_back(complex_json(c));
    return a;
}

inline void series_csv(std::ostream& os, const PowerSeries& s) {
    os << "k,re,im\n";
    for (std::size_t k = 0; k < s.size(); ++k) os << k << ',' << format_g17(s[k].real()) << ',' << format_g17(s[k].imag()) << '\n';
}

inline ojson measure_json(const HerglotzMeasure& m) {
    ojson atoms = ojson::array();
    for (const auto& a : m.atoms) atoms.push_back({{"weight", a.weight}, {"angle", a.angle}});
    return {{"seed", m.seed}, {"atoms", atoms}};
}

inline ojson root_json(RadiusKind kind, double param, const RootResult& r) {
    return {{"kind", std::string(to_string(kind))},
            {"param", param},
            {"r", r.r},
            {"residual", r.residual},
            {"bracket", {r.bracket.first, r.bracket.second}},
            {"iterations", r.iterations},
            {"saturated", r.saturated}};
}

inline ojson threshold_json(const ThresholdReport& t) {
    ojson j{{"name", t.name}, {"computed", t.computed}};
    j["paper_value"] = t.paper_value ? ojson(*t.paper_value) : ojson(nullptr);
    j["abs_diff"] = t.abs_diff ? ojson(*t.abs_diff) : ojson(nullptr);
    j["note"] = t.note;
    return j;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

inline std::string cmd_coeffs(const GlobalOptions& g, const std::string& function) {
    PowerSeries s;
    if (function == "phi") s = phi_series(g.order);
    else if (function == "g") s = g_series(g.order);
    else if (function == "extremal") s = build_extremal(2, g.order).series();
    else throw std::invalid_argument("coeffs: unknown function " + function);
    if (g.csv) {
        std::ostringstream os;
        series_csv(os, s);
        return os.str();
    }
    return dump({{"function", function}, {"order", g.order}, {"coefficients", series_json(s)}});
}

inline std::string cmd_phi(const GlobalOptions& g, double radius) {
    const auto s = sample_circle(radius, g.samples_or(4096));
    std::ostringstream os;
    if (g.csv) {
        write_csv(os, s);
        return os.str();
    }
    ojson pts = ojson::array();
    for (const auto& p : s.points) pts.push_back({{"theta", p.theta}, {"re", p.w.real()}, {"im", p.w.imag()}});
    const auto rr = radius < 1.0 ? std::optional<RealRange>(radial_real_range(radius)) : std::nullopt;
    ojson j{{"radius", radius}, {"count", s.count()}};
    if (rr) j["real_range"] = {{"lower", rr->lower}, {"upper", rr->upper}, {"verified", rr->verified}};
    j["points"] = pts;
    return dump(j);
}

inline std::string cmd_extremal(const GlobalOptions& g, int n, std::optional<double> radius) {
    const auto f = build_extremal(n, g.order);
    if (g.csv) {
        std::ostringstream os;
        series_csv(os, f.series());
        return os.str();
    }
    ojson coeffs = ojson::array();
    for (int k = 0; k <= f.order(); ++k) coeffs.push_back(f.a(k).real());
    ojson j{{"n", n}, {"order", g.order}, {"coefficients", coeffs}};
    if (radius) {
        if (n != 2) throw std::invalid_argument("extremal: envelopes are defined for n = 2 only");
        const auto gr = growth_envelope(*radius);
        const auto di = distortion_envelope(*radius);
        j["growth"] = {{"lower", gr.lower}, {"upper", gr.upper}, {"tail_estimate", gr.tail_estimate}};
        j["distortion"] = {{"lower", di.lower}, {"upper", di.upper}, {"tail_estimate", di.tail_estimate}};
        j["rotation"] = rotation_bound(*radius);
    }
    return dump(j);
}

inline std::string cmd_sample(const GlobalOptions& g, int max_atoms) {
    const int n = g.samples_or(10);
    std::ostringstream os;
    if (g.csv) os << "index,seed,atoms,a2_re,a2_im,a3_re,a3_im,a4_re,a4_im,a5_re,a5_im\n";
    ojson arr = ojson::array();
    for (int i = 0; i < n; ++i) {
        const auto m = sample_measure(g.seed + static_cast<std::uint64_t>(i), max_atoms);
        const auto f = member_from_measure(m, std::max(g.order, 5));
        if (g.csv) {
            os << i << ',' << m.seed << ',' << m.atoms.size();
            for (int k = 2; k <= 5; ++k) os << ',' << format_g17(f.a(k).real()) << ',' << format_g17(f.a(k).imag());
            os << '\n';
        } else {
            ojson coeffs = ojson::array();
            for (int k = 0; k <= f.order(); ++k) coeffs.push_back(complex_json(f.a(k)));
            arr.push_back({{"index", i}, {"measure", measure_json(m)}, {"coefficients", coeffs}});
        }
    }
    return g.csv ? os.str() : dump(arr);
}

inline std::string cmd_functionals(const GlobalOptions& g, bool with_convolution) {
    if (g.order < 5) throw std::invalid_argument("functionals: --order must be >= 5");
    ReportOptions opts;
    opts.with_convolution = with_convolution;
    const int n = g.samples_or(100);
    const auto ext = compute_report(build_extremal(2, g.order), opts);
    ojson samples = ojson::array();
    bool all_pass = ext.flags.enforced_pass();
    double max_h22 = 0.0;
    double max_h31 = 0.0;
    double max_a5 = std::abs(ext.a5);
    double min_t31 = ext.t31;
    std::ostringstream os;
    if (g.csv) os << "index,seed,a2_abs,a3_abs,a4_abs,a5_abs,h22_abs,h31_abs,t21,t31,enforced_pass\n";
    for (int i = 0; i < n; ++i) {
        const auto m = sample_measure(g.seed + static_cast<std::uint64_t>(i), 8);
        const auto r = compute_report(member_from_measure(m, g.order), opts);
        all_pass = all_pass && r.flags.enforced_pass();
        max_h22 = std::max(max_h22, std::abs(r.h22));
        max_h31 = std::max(max_h31, std::abs(r.h31));
        max_a5 = std::max(max_a5, std::abs(r.a5));
        min_t31 = std::min(min_t31, r.t31);
        if (g.csv) {
            os << i << ',' << m.seed << ',' << format_g17(std::abs(r.a2)) << ',' << format_g17(std::abs(r.a3)) << ','
               << format_g17(std::abs(r.a4)) << ',' << format_g17(std::abs(r.a5)) << ',' << format_g17(std::abs(r.h22))
               << ',' << format_g17(std::abs(r.h31)) << ',' << format_g17(r.t21) << ',' << format_g17(r.t31) << ','
               << (r.flags.enforced_pass() ? "true" : "false") << '\n';
        } else {
            samples.push_back({{"index", i}, {"seed", m.seed}, {"report", to_json(r)}});
        }
    }
    std::string text;
    if (g.csv) {
        text = os.str();
    } else {
        ojson j{{"order", g.order}, {"extremal", to_json(ext)}, {"samples", samples}};
        j["summary"] = {{"count", n},        {"max_h22_abs", max_h22}, {"max_h31_abs", max_h31},
                        {"max_a5_abs", max_a5}, {"min_t31", min_t31}, {"all_enforced_pass", all_pass}};
        text = dump(j);
    }
    if (!all_pass) throw VerificationFailure{text};
    return text;
}

inline std::string cmd_optimize(const GlobalOptions& g, const std::string& objective, int grid, int refine) {
    const auto m = maximize_box(objective, grid, refine);
    if (g.csv) {
        std::ostringstream os;
        os << "objective,p,x,y,value,grid,refined\n"
           << m.objective << ',' << format_g17(m.argmax.p) << ',' << format_g17(m.argmax.x) << ','
           << format_g17(m.argmax.y) << ',' << format_g17(m.value) << ',' << m.grid << ','
           << (m.refined ? "true" : "false") << '\n';
        return os.str();
    }
    return dump({{"objective", m.objective},
                 {"argmax", {m.argmax.p, m.argmax.x, m.argmax.y}},
                 {"value", m.value},
                 {"grid", m.grid},
                 {"refined", m.refined}});
}

inline std::string cmd_radius(const GlobalOptions& g, const std::string& kind_name, double param) {
    const auto kind = parse_radius_kind(kind_name);
    const auto r = solve_radius(kind, param);
    if (g.csv) {
        std::ostringstream os;
        os << "kind,param,r,residual,bracket_lo,bracket_hi,iterations,saturated\n"
           << kind_name << ',' << format_g17(param) << ',' << format_g17(r.r) << ',' << format_g17(r.residual) << ','
           << format_g17(r.bracket.first) << ',' << format_g17(r.bracket.second) << ',' << r.iterations << ','
           << (r.saturated ? "true" : "false") << '\n';
        return os.str();
    }
    if (r.residual > g.tolerance) throw VerificationFailure{dump(root_json(kind, param, r))};
    return dump(root_json(kind, param, r));
}

inline std::vector<ThresholdReport> all_constants(int samples) {
    auto rows = gamma_constants();
    auto add = [&](const SubordinationThreshold& t, std::optional<double> paper) {
        rows.push_back(make_threshold(t.target + "_threshold", t.value, paper, t.note));
    };
    add(subordination_threshold(ThresholdTarget::exponential()), PaperValues::exp_threshold);
    add(subordination_threshold(ThresholdTarget::cardioid()), PaperValues::cardioid_threshold);
    add(subordination_threshold(ThresholdTarget::sine()), PaperValues::sine_threshold);
    add(subordination_threshold(ThresholdTarget::janowski(1.0, -1.0)), std::nullopt);
    const auto par = parabola_b0(std::max(samples, 4096));
    rows.push_back(make_threshold("parabola_min_value", par.min_value, PaperValues::parabola_min));
    rows.push_back(make_threshold("parabola_theta_min", par.theta_min, PaperValues::parabola_theta));
    rows.push_back(make_threshold("b0", par.b0, PaperValues::b0));
    rows.push_back(make_threshold("parabola_global_min", par.global_min, std::nullopt, "attained at theta = 0"));
    const auto misc = misc_constants(std::max(samples, 1024));
    rows.push_back(make_threshold("k2", misc.k2, std::nullopt, "sech 2"));
    rows.push_back(make_threshold("conv_sufficient", misc.conv_sufficient, std::nullopt, "1/2 + (2 + sinh 1)/cos 1"));
    rows.push_back(make_threshold("circle_cos_min", misc.circle_cos_min, std::cos(1.0)));
    rows.push_back(make_threshold("circle_sin_max", misc.circle_sin_max, std::sinh(1.0)));
    rows.push_back(make_threshold("logderiv_min", misc.logderiv_min, 0.5 + misc.k2, "against 1/2 + sech 2"));
    const auto inc = inclusion_constants();
    rows.push_back(make_threshold("kst_threshold", inc.kst_threshold, std::nullopt));
    rows.push_back(make_threshold("mu_beta_threshold", inc.mu_beta_threshold, std::nullopt, "2 sec 1"));
    const auto stp = stp_constant(std::max(samples, 1024));
    rows.push_back(make_threshold("a0", stp.a0, 0.402301));
    rows.push_back(make_threshold("theta0", stp.theta0, 0.665124));
    rows.push_back(make_threshold("gamma0", phi_global_bounds(std::max(samples, 256)).im_abs_max, 1.6471));
    return rows;
}

inline std::string cmd_constants(const GlobalOptions& g) {
    const auto rows = all_constants(g.samples_or(4096));
    if (g.csv) {
        std::ostringstream os;
        os << "name,computed,paper_value,abs_diff\n";
        for (const auto& r : rows) {
            os << r.name << ',' << format_g17(r.computed) << ',' << (r.paper_value ? format_g17(*r.paper_value) : "")
               << ',' << (r.abs_diff ? format_g17(*r.abs_diff) : "") << '\n';
        }
        return os.str();
    }
    ojson arr = ojson::array();
    for (const auto& r : rows) arr.push_back(threshold_json(r));
    return dump(arr);
}

inline std::string cmd_convolution(const GlobalOptions& g, std::optional<int> n) {
    const ClassMember f = n ? build_extremal(*n, std::max(g.order, *n))
                            : member_from_measure(sample_measure(g.seed, 8), g.order);
    ConvolutionGrid grid;
    if (g.samples > 0) grid.theta_samples = g.samples;
    const auto m = convolution_margin(f, grid);
    const auto s = sufficient_coefficient_check(f, grid.theta_samples);
    if (g.csv) {
        std::ostringstream os;
        os << "margin,theta,z_re,z_im,sufficient_lhs,sufficient_holds\n"
           << format_g17(m.margin) << ',' << format_g17(m.theta) << ',' << format_g17(m.z.real()) << ','
           << format_g17(m.z.imag()) << ',' << format_g17(s.lhs_max) << ',' << (s.holds ? "true" : "false") << '\n';
        return os.str();
    }
    return dump({{"member", f.provenance().kind + " " + f.provenance().detail},
                 {"order", f.order()},
                 {"margin", m.margin},
                 {"theta", m.theta},
                 {"z", complex_json(m.z)},
                 {"sufficient_lhs_max", s.lhs_max},
                 {"sufficient_holds", s.holds}});
}

inline std::string cmd_report(const GlobalOptions& g, bool strict) {
    ReportConfig cfg;
    cfg.samples = g.samples_or(cfg.samples);
    cfg.seed = g.seed;
    const auto rows = discrepancy_report(cfg);
    std::string text;
    if (g.csv) {
        std::ostringstream os;
        os << "constant_name,paper_value,computed_value,abs_diff,tolerance,status\n";
        for (const auto& r : rows) {
            os << r.constant_name << ',' << format_g17(r.paper_value) << ',' << format_g17(r.computed_value) << ','
               << format_g17(r.abs_diff) << ',' << format_g17(r.tolerance) << ',' << to_string(r.status) << '\n';
        }
        text = os.str();
    } else {
        ojson arr = ojson::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        text = dump(arr);
    }
    if (strict) {
        for (const auto& r : rows)
            if (r.status == DiscrepancyStatus::mismatch) throw VerificationFailure{text};
    }
    return text;
}

}  // namespace cli_detail

/// `argv` holds the arguments after the program name.
inline CommandResult run_command(const std::vector<std::string>& argv) {
    using namespace cli_detail;
    CLI::App app{"Verification workbench for starlike functions associated with (1 + z)/cos z", "ncstar"};
    app.fallthrough();
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--order", g.order, "truncation order")->check(CLI::Range(1, 64));
    app.add_option("--seed", g.seed, "base seed for sampled members");
    app.add_option("--samples", g.samples, "sample count (meaning depends on the subcommand)")->check(CLI::PositiveNumber);
    app.add_flag("--csv", g.csv, "emit CSV instead of JSON");
    app.add_option("--tolerance", g.tolerance, "verification tolerance")->check(CLI::PositiveNumber);

    std::string function = "phi";
    auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of phi, g or the extremal function");
    coeffs->add_option("--function", function)->check(CLI::IsMember({"phi", "g", "extremal"}));

    double radius = 1.0;
    auto* phi = app.add_subcommand("phi", "phi sampled on a circle");
    phi->add_option("--radius", radius)->check(CLI::Range(0.0, 1.0));

    int n = 2;
    std::optional<double> env_radius;
    auto* extremal = app.add_subcommand("extremal", "coefficients of f_n");
    extremal->add_option("--n", n)->check(CLI::Range(2, 64));
    extremal->add_option("--radius", env_radius, "also report envelopes at this radius");

    int max_atoms = 8;
    auto* sample = app.add_subcommand("sample", "seeded Herglotz members");
    sample->add_option("--max-atoms", max_atoms)->check(CLI::Range(1, 8));

    bool with_conv = false;
    auto* functionals = app.add_subcommand("functionals", "coefficient functionals over sampled members");
    functionals->add_flag("--convolution", with_conv, "also compute the convolution margin");

    std::string objective;
    int grid = 201;
    int refine = 2000;
    auto* optimize = app.add_subcommand("optimize", "maximize a proof-surface objective");
    optimize->add_option("--objective", objective)->required();
    optimize->add_option("--grid", grid)->check(CLI::Range(51, 2001));
    optimize->add_option("--refine", refine)->check(CLI::Range(1, 100000));

    std::string kind;
    double param = 0.0;
    auto* radius_cmd = app.add_subcommand("radius", "solve a radius problem");
    radius_cmd->add_option("kind", kind)->required();
    radius_cmd->add_option("param", param)->required();

    app.add_subcommand("constants", "subordination and inclusion constants");

    std::optional<int> conv_n;
    auto* conv = app.add_subcommand("convolution-check", "convolution margin of f_n or a sampled member");
    conv->add_option("--n", conv_n)->check(CLI::Range(2, 64));

    bool strict = false;
    auto* report = app.add_subcommand("report", "computed constants against reference values");
    report->add_flag("--strict", strict, "exit 3 when any row is a mismatch");

    CommandResult res;
    std::vector<std::string> args{"ncstar"};
    args.insert(args.end(), argv.begin(), argv.end());
    std::vector<char*> cargs;
    for (auto& a : args) cargs.push_back(a.data());

    std::ostringstream out;
    std::ostringstream err;
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {kExitOk, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {kExitUsage, out.str(), err.str()};
    }

    try {
        if (coeffs->parsed()) res.out = cmd_coeffs(g, function);
        else if (phi->parsed()) res.out = cmd_phi(g, radius);
        else if (extremal->parsed()) res.out = cmd_extremal(g, n, env_radius);
        else if (sample->parsed()) res.out = cmd_sample(g, max_atoms);
        else if (functionals->parsed()) res.out = cmd_functionals(g, with_conv);
        else if (optimize->parsed()) res.out = cmd_optimize(g, objective, grid, refine);
        else if (radius_cmd->parsed()) res.out = cmd_radius(g, kind, param);
        else if (conv->parsed()) res.out = cmd_convolution(g, conv_n);
        else if (report->parsed()) res.out = cmd_report(g, strict);
        else res.out = cmd_constants(g);
    } catch (const VerificationFailure& v) {
        return {kExitVerification, v.what, "verification failed\n"};
    } catch (const std::logic_error& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitInternal, "", std::string("error: ") + e.what() + "\n"};
    }
    return res;
}

}  // namespace ncstar
