#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schwlab/criteria.hpp"
#include "schwlab/expression.hpp"
#include "schwlab/norm_estimation.hpp"
#include "schwlab/property_suites.hpp"
#include "schwlab/report.hpp"
#include "schwlab/schwarzian.hpp"
#include "schwlab/version.hpp"

namespace {

using namespace schwlab;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitEvaluation = 2;
constexpr int kExitParse = 3;

struct CommonFlags {
    SamplingSpec sampling;
    double rel_tol = 1e-4;
    std::uint64_t seed = 12345;
    std::string json_path;
};

void add_grid_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--radii", flags.sampling.n_radii, "Radial grid lines (>= 4)");
    cmd->add_option("--angles", flags.sampling.n_angles, "Angular grid lines (>= 4)");
    cmd->add_option("--rmax", flags.sampling.r_max, "Outermost sampled radius, in (0,1)");
    cmd->add_option("--refine", flags.sampling.refine_rounds,
                    "Local refinement rounds around the argmax");
    cmd->add_option("--tol", flags.rel_tol, "Relative convergence tolerance");
    cmd->add_option("--seed", flags.seed, "Seed for randomized commands");
    cmd->add_option("--json", flags.json_path, "Write the JSON report to this path");
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

void write_report(const CommonFlags& flags, ReportDocument& doc, double ms) {
    doc.timing_ms = ms;
    if (!flags.json_path.empty()) {
        std::ofstream out(flags.json_path);
        if (!out) {
            throw Error("cannot open '" + flags.json_path + "' for writing");
        }
        out << to_json_string(doc) << "\n";
    }
}

int finish(const CommonFlags& flags, ReportDocument& doc,
           std::chrono::steady_clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    write_report(flags, doc, ms);
    if (doc.failure) return kExitEvaluation;
    for (const auto& c : doc.certificates) {
        if (c.verdict == Verdict::refuted) return kExitRefuted;
    }
    for (const auto& s : doc.suites) {
        if (!s.passed) return kExitRefuted;
    }
    return kExitOk;
}

void print_norm_report(const std::string& name, const NormReport& r) {
    std::cout << name << ":\n"
              << "  lower_bound = " << r.lower_bound << "\n"
              << "  estimate    = " << r.estimate << "\n"
              << "  argmax      = " << format_complex(r.argmax) << "\n"
              << "  converged   = " << (r.converged ? "yes" : "no")
              << ", samples = " << r.samples_used;
    if (r.boundary_degenerate) std::cout << ", boundary_degenerate";
    std::cout << "\n";
}

void print_certificate(const Certificate& c) {
    std::cout << c.criterion << ": " << to_string(c.verdict)
              << " (measured " << c.measured << ", threshold " << c.threshold << ")\n";
    if (c.witness) std::cout << "  witness: " << format_complex(*c.witness) << "\n";
    if (c.witness2) std::cout << "  witness2: " << format_complex(*c.witness2) << "\n";
    if (!c.caveat.empty()) std::cout << "  caveat: " << c.caveat << "\n";
}

int run_eval(const std::string& spec_text, const std::vector<std::string>& point_args,
             const CommonFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    const MapSpec spec = parse_map_spec(spec_text);
    ReportDocument doc;
    doc.command = "eval";
    doc.input_spec = spec_text;
    doc.sampling = flags.sampling;
    doc.seed = flags.seed;

    for (const std::string& arg : point_args) {
        const Complex z = parse_complex(arg);
        try {
            const Jet3 hj = spec.map.analytic_part()(z);
            const Jet3 gj = spec.map.coanalytic_part()(z);
            const Jet3 wj = spec.map.dilatation_jet(z);
            const Complex s = schwarzian_harmonic(spec.map, z);
            std::cout << "z = " << format_complex(z) << "\n"
                      << "  h:     " << format_complex(hj.d0) << "  h' " << format_complex(hj.d1)
                      << "  h'' " << format_complex(hj.d2) << "  h''' " << format_complex(hj.d3)
                      << "\n"
                      << "  g:     " << format_complex(gj.d0) << "  g' " << format_complex(gj.d1)
                      << "  g'' " << format_complex(gj.d2) << "  g''' " << format_complex(gj.d3)
                      << "\n"
                      << "  omega: " << format_complex(wj.d0) << "  w' " << format_complex(wj.d1)
                      << "  w'' " << format_complex(wj.d2) << "\n"
                      << "  S_f = " << format_complex(s)
                      << "   |S_f|(1-|z|^2)^2 = " << weighted_magnitude(s, z) << "\n";
        } catch (EvaluationError& e) {
            e.attach_point(z);
            throw;
        }
    }
    ReportDocument done = doc;
    return finish(flags, done, start);
}

int run_norm(const std::string& spec_text, const std::string& which,
             const CommonFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    const MapSpec spec = parse_map_spec(spec_text);
    ReportDocument doc;
    doc.command = "norm";
    doc.input_spec = spec_text;
    doc.sampling = flags.sampling;
    doc.seed = flags.seed;

    try {
        NormReport report;
        if (which == "schwarzian") {
            report = estimate_schwarzian_norm(spec.map, flags.sampling, flags.rel_tol);
        } else if (which == "omega_star") {
            report = estimate_omega_star_norm(spec.omega, flags.sampling, flags.rel_tol);
        } else if (which == "omega_second") {
            report = estimate_omega_second_functional(spec.omega, flags.sampling,
                                                      flags.rel_tol);
        } else if (which == "omega_sup") {
            report = estimate_sup_modulus(spec.omega, flags.sampling, flags.rel_tol);
        } else {
            throw Error("unknown functional '" + which + "'");
        }
        doc.norm_reports.push_back(NamedNormReport{which, report});
        print_norm_report(which, report);
    } catch (EvaluationError& e) {
        doc.failure = EvaluationFailure{e.what(), e.point()};
        std::cerr << "evaluation error: " << e.what() << "\n";
    }
    return finish(flags, doc, start);
}

int run_verify(const std::string& suite, int cases, const CommonFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.command = "verify";
    doc.sampling = flags.sampling;
    doc.seed = flags.seed;

    std::vector<std::string> names;
    if (suite == "all") {
        names = verify::suite_names();
    } else {
        names.push_back(suite);
    }
    for (const std::string& name : names) {
        const verify::SuiteResult r = verify::run_suite(name, cases, flags.seed);
        SuiteSummary summary;
        summary.suite = r.suite;
        summary.cases = r.cases;
        summary.rejected = r.rejected;
        summary.tolerance = r.tolerance;
        summary.max_residual = r.max_residual;
        summary.passed = r.passed();
        for (const auto& f : r.failures) {
            summary.failures.push_back(SuiteCaseFailure{f.seed, f.residual, f.detail});
        }
        doc.suites.push_back(summary);
        std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " ("
                  << r.cases << " cases, max residual " << r.max_residual
                  << ", tolerance " << r.tolerance;
        if (r.rejected > 0) std::cout << ", " << r.rejected << " guard-rejected";
        std::cout << ")\n";
        for (const auto& f : r.failures) {
            std::cout << "  failed case seed " << f.seed << ": residual " << f.residual
                      << " — " << f.detail << "\n";
        }
    }
    return finish(flags, doc, start);
}

int run_lens_demo(double alpha, double t, double delta, const CommonFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.command = "lens-demo";
    doc.sampling = flags.sampling;
    doc.seed = flags.seed;
    {
        std::ostringstream os;
        os << "h=z; g'=lens(" << alpha << ")";
        doc.input_spec = os.str();
    }
    if (!(t > 0.0 && t < 1.0)) {
        throw InvalidT("lens demo requires 0 < t < 1, got " + std::to_string(t));
    }

    const AnalyticMap omega = make_lens_map(alpha);
    const HarmonicMap f(AnalyticMap::identity(), antiderivative(omega));

    try {
        const NormReport star = estimate_omega_star_norm(omega, flags.sampling, flags.rel_tol);
        const NormReport schw = estimate_schwarzian_norm(f, flags.sampling, flags.rel_tol);
        const NormReport sup = estimate_sup_modulus(omega, flags.sampling, flags.rel_tol);
        const NormReport second =
            estimate_omega_second_functional(omega, flags.sampling, flags.rel_tol);
        doc.norm_reports.push_back(NamedNormReport{"omega_star", star});
        doc.norm_reports.push_back(NamedNormReport{"schwarzian", schw});
        doc.norm_reports.push_back(NamedNormReport{"omega_sup", sup});
        doc.norm_reports.push_back(NamedNormReport{"omega_second", second});

        const Certificate qc = qc_extension_check(f, delta, t, flags.sampling);
        doc.certificates.push_back(qc);

        LensDemoSection demo;
        demo.alpha = alpha;
        demo.t = t;
        demo.omega_star = star.estimate;
        demo.schwarzian_norm = schw.estimate;
        demo.sup_modulus = sup.estimate;
        demo.boundary_degenerate = sup.boundary_degenerate;
        demo.empirical_k2 = second.estimate / star.estimate;
        demo.bound_first_term = demo.empirical_k2 * alpha;
        demo.bound_second_term = 1.5 * alpha * alpha;
        demo.norm_within_bound =
            schw.estimate <= demo.bound_first_term + demo.bound_second_term + 1e-9;
        demo.qc_verdict = to_string(qc.verdict);
        doc.lens_demo = demo;

        std::cout << "lens demo: alpha = " << alpha << ", t = " << t
                  << " (delta defaults to the analytic-case value " << delta
                  << "; the universal harmonic threshold has no published value)\n";
        print_norm_report("omega_star (expected alpha)", star);
        print_norm_report("schwarzian norm of f = z + conj(g), g' = lens(alpha)", schw);
        print_norm_report("sup |omega|", sup);
        std::cout << "empirical K2 candidate = " << demo.empirical_k2
                  << " (second-order functional / omega_star)\n"
                  << "bound components: " << demo.bound_first_term << " + "
                  << demo.bound_second_term << " = "
                  << demo.bound_first_term + demo.bound_second_term
                  << (demo.norm_within_bound ? "  >= schwarzian estimate"
                                             : "  (schwarzian estimate exceeds!)")
                  << "\n";
        print_certificate(qc);
    } catch (EvaluationError& e) {
        doc.failure = EvaluationFailure{e.what(), e.point()};
        std::cerr << "evaluation error: " << e.what() << "\n";
    }
    return finish(flags, doc, start);
}

int run_mesh(const std::string& spec_text, const std::string& out_path, int n_radii,
             int n_angles, double r_max) {
    const MapSpec spec = parse_map_spec(spec_text);
    std::ofstream out(out_path);
    if (!out) {
        throw Error("cannot open '" + out_path + "' for writing");
    }
    out << "r,theta,re_z,im_z,re_f,im_f,jacobian,error\n";
    out.precision(17);
    for (int k = 0; k < n_radii; ++k) {
        const double r = r_max * (k + 1) / n_radii;
        for (int j = 0; j < n_angles; ++j) {
            const double theta = 2.0 * M_PI * j / n_angles;
            const Complex z = std::polar(r, theta);
            out << r << "," << theta << "," << z.real() << "," << z.imag() << ",";
            try {
                const Complex w = spec.map.eval(z);
                const double jac = spec.map.jacobian(z);
                out << w.real() << "," << w.imag() << "," << jac << ",\n";
            } catch (const EvaluationError& e) {
                std::string msg = e.what();
                for (char& c : msg) {
                    if (c == '"' || c == ',') c = ';';
                }
                out << ",,,\"" << msg << "\"\n";
            }
        }
    }
    std::cout << "wrote " << n_radii * n_angles << " mesh rows to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schwarzian derivatives of harmonic mappings on the unit disk: "
                 "norms, univalence criteria, quasiconformal-extension checks"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonFlags flags;

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate jets and S_f at points");
    std::string eval_spec;
    std::string eval_points;
    eval_cmd->add_option("spec", eval_spec, "Map specification, e.g. \"h=koebe(); g=0\"")
        ->required();
    eval_cmd->add_option("--points", eval_points,
                         "Comma-separated complex points, e.g. \"0.5, 0.3+0.1i\"")
        ->required();
    add_grid_flags(eval_cmd, flags);

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "Estimate a sup norm over the disk");
    std::string norm_spec, norm_which = "schwarzian";
    norm_cmd->add_option("spec", norm_spec, "Map specification")->required();
    norm_cmd->add_option("--which", norm_which,
                         "schwarzian | omega_star | omega_second | omega_sup");
    add_grid_flags(norm_cmd, flags);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    std::string verify_suite = "all";
    int verify_cases = 500;
    verify_cmd->add_option("--suite", verify_suite,
                           "chain_rule | affine_invariance | norm_automorphism | "
                           "schwarz_pick | jets_vs_fd | all");
    verify_cmd->add_option("--cases", verify_cases, "Cases per suite");
    add_grid_flags(verify_cmd, flags);

    // lens-demo
    auto* demo_cmd = app.add_subcommand(
        "lens-demo", "Small Schwarzian norm with unbounded dilatation: the "
                     "quasiconformal hypothesis fails even though ||S_f|| is small");
    double demo_alpha = 0.25, demo_t = 0.5, demo_delta = 2.0;
    demo_cmd->add_option("--alpha", demo_alpha, "Lens exponent in (0, 1]");
    demo_cmd->add_option("--t", demo_t, "Extension parameter in (0, 1)");
    demo_cmd->add_option("--delta", demo_delta,
                         "Norm threshold; defaults to 2, the analytic-case value");
    add_grid_flags(demo_cmd, flags);

    // mesh
    auto* mesh_cmd = app.add_subcommand("mesh", "Export an image mesh as CSV");
    std::string mesh_spec, mesh_out;
    int mesh_radii = 32, mesh_angles = 128;
    double mesh_rmax = 0.99;
    mesh_cmd->add_option("spec", mesh_spec, "Map specification")->required();
    mesh_cmd->add_option("--out", mesh_out, "Output CSV path")->required();
    mesh_cmd->add_option("--radii", mesh_radii, "Radial mesh lines");
    mesh_cmd->add_option("--angles", mesh_angles, "Angular mesh lines");
    mesh_cmd->add_option("--rmax", mesh_rmax, "Outermost mesh radius");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd) {
            std::vector<std::string> points;
            std::stringstream ss(eval_points);
            std::string item;
            while (std::getline(ss, item, ',')) points.push_back(item);
            return run_eval(eval_spec, points, flags);
        }
        if (*norm_cmd) return run_norm(norm_spec, norm_which, flags);
        if (*verify_cmd) return run_verify(verify_suite, verify_cases, flags);
        if (*demo_cmd) return run_lens_demo(demo_alpha, demo_t, demo_delta, flags);
        if (*mesh_cmd) return run_mesh(mesh_spec, mesh_out, mesh_radii, mesh_angles, mesh_rmax);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EvaluationError& e) {
        std::cerr << "evaluation error: " << e.what();
        if (e.point()) std::cerr << " at z = " << format_complex(*e.point());
        std::cerr << "\n";
        return kExitEvaluation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEvaluation;
    }
    return kExitOk;
}
