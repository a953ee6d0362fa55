#include "schwlab/report.hpp"

#include <initializer_list>
#include <string>

#include "json.hpp"

namespace schwlab {
namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw Error("unknown field '" + item.key() + "' in " + where);
        }
    }
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
    check_keys(j, {"re", "im"}, "complex value");
    return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

json sampling_to_json(const SamplingSpec& s) {
    return json{{"n_radii", s.n_radii},
                {"n_angles", s.n_angles},
                {"r_max", s.r_max},
                {"refine_rounds", s.refine_rounds},
                {"refine_factor", s.refine_factor}};
}

SamplingSpec sampling_from_json(const json& j) {
    check_keys(j, {"n_radii", "n_angles", "r_max", "refine_rounds", "refine_factor"},
               "sampling");
    SamplingSpec s;
    s.n_radii = j.at("n_radii").get<int>();
    s.n_angles = j.at("n_angles").get<int>();
    s.r_max = j.at("r_max").get<double>();
    s.refine_rounds = j.at("refine_rounds").get<int>();
    s.refine_factor = j.at("refine_factor").get<int>();
    return s;
}

json norm_report_to_json(const NamedNormReport& n) {
    return json{{"name", n.name},
                {"lower_bound", n.report.lower_bound},
                {"estimate", n.report.estimate},
                {"argmax", complex_to_json(n.report.argmax)},
                {"converged", n.report.converged},
                {"samples_used", n.report.samples_used},
                {"boundary_degenerate", n.report.boundary_degenerate}};
}

NamedNormReport norm_report_from_json(const json& j) {
    check_keys(j,
               {"name", "lower_bound", "estimate", "argmax", "converged", "samples_used",
                "boundary_degenerate"},
               "norm report");
    NamedNormReport n;
    n.name = j.at("name").get<std::string>();
    n.report.lower_bound = j.at("lower_bound").get<double>();
    n.report.estimate = j.at("estimate").get<double>();
    n.report.argmax = complex_from_json(j.at("argmax"));
    n.report.converged = j.at("converged").get<bool>();
    n.report.samples_used = j.at("samples_used").get<long long>();
    n.report.boundary_degenerate = j.at("boundary_degenerate").get<bool>();
    return n;
}

json certificate_to_json(const Certificate& c) {
    json j{{"criterion", c.criterion},
           {"verdict", to_string(c.verdict)},
           {"measured", c.measured},
           {"threshold", c.threshold},
           {"caveat", c.caveat}};
    if (c.witness) j["witness"] = complex_to_json(*c.witness);
    if (c.witness2) j["witness2"] = complex_to_json(*c.witness2);
    return j;
}

Certificate certificate_from_json(const json& j) {
    check_keys(j, {"criterion", "verdict", "measured", "threshold", "caveat", "witness",
                   "witness2"},
               "certificate");
    Certificate c;
    c.criterion = j.at("criterion").get<std::string>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "certified") {
        c.verdict = Verdict::certified;
    } else if (v == "refuted") {
        c.verdict = Verdict::refuted;
    } else if (v == "inconclusive") {
        c.verdict = Verdict::inconclusive;
    } else {
        throw Error("unknown verdict '" + v + "'");
    }
    c.measured = j.at("measured").get<double>();
    c.threshold = j.at("threshold").get<double>();
    c.caveat = j.at("caveat").get<std::string>();
    if (j.contains("witness")) c.witness = complex_from_json(j.at("witness"));
    if (j.contains("witness2")) c.witness2 = complex_from_json(j.at("witness2"));
    return c;
}

json suite_to_json(const SuiteSummary& s) {
    json failures = json::array();
    for (const auto& f : s.failures) {
        failures.push_back(json{{"seed", f.seed}, {"residual", f.residual},
                                {"detail", f.detail}});
    }
    return json{{"suite", s.suite},
                {"cases", s.cases},
                {"rejected", s.rejected},
                {"tolerance", s.tolerance},
                {"max_residual", s.max_residual},
                {"passed", s.passed},
                {"failures", failures}};
}

SuiteSummary suite_from_json(const json& j) {
    check_keys(j, {"suite", "cases", "rejected", "tolerance", "max_residual", "passed",
                   "failures"},
               "suite summary");
    SuiteSummary s;
    s.suite = j.at("suite").get<std::string>();
    s.cases = j.at("cases").get<int>();
    s.rejected = j.at("rejected").get<int>();
    s.tolerance = j.at("tolerance").get<double>();
    s.max_residual = j.at("max_residual").get<double>();
    s.passed = j.at("passed").get<bool>();
    for (const auto& f : j.at("failures")) {
        check_keys(f, {"seed", "residual", "detail"}, "suite failure");
        s.failures.push_back(SuiteCaseFailure{f.at("seed").get<std::uint64_t>(),
                                              f.at("residual").get<double>(),
                                              f.at("detail").get<std::string>()});
    }
    return s;
}

json lens_demo_to_json(const LensDemoSection& d) {
    return json{{"alpha", d.alpha},
                {"t", d.t},
                {"omega_star", d.omega_star},
                {"schwarzian_norm", d.schwarzian_norm},
                {"sup_modulus", d.sup_modulus},
                {"boundary_degenerate", d.boundary_degenerate},
                {"empirical_k2", d.empirical_k2},
                {"bound_first_term", d.bound_first_term},
                {"bound_second_term", d.bound_second_term},
                {"norm_within_bound", d.norm_within_bound},
                {"qc_verdict", d.qc_verdict}};
}

LensDemoSection lens_demo_from_json(const json& j) {
    check_keys(j,
               {"alpha", "t", "omega_star", "schwarzian_norm", "sup_modulus",
                "boundary_degenerate", "empirical_k2", "bound_first_term",
                "bound_second_term", "norm_within_bound", "qc_verdict"},
               "lens demo");
    LensDemoSection d;
    d.alpha = j.at("alpha").get<double>();
    d.t = j.at("t").get<double>();
    d.omega_star = j.at("omega_star").get<double>();
    d.schwarzian_norm = j.at("schwarzian_norm").get<double>();
    d.sup_modulus = j.at("sup_modulus").get<double>();
    d.boundary_degenerate = j.at("boundary_degenerate").get<bool>();
    d.empirical_k2 = j.at("empirical_k2").get<double>();
    d.bound_first_term = j.at("bound_first_term").get<double>();
    d.bound_second_term = j.at("bound_second_term").get<double>();
    d.norm_within_bound = j.at("norm_within_bound").get<bool>();
    d.qc_verdict = j.at("qc_verdict").get<std::string>();
    return d;
}

}  // namespace

std::string to_json_string(const ReportDocument& doc, int indent) {
    json norm_reports = json::array();
    for (const auto& n : doc.norm_reports) norm_reports.push_back(norm_report_to_json(n));
    json certificates = json::array();
    for (const auto& c : doc.certificates) certificates.push_back(certificate_to_json(c));
    json suites = json::array();
    for (const auto& s : doc.suites) suites.push_back(suite_to_json(s));

    json j{{"schema_version", doc.schema_version},
           {"tool_name", doc.tool_name},
           {"tool_version", doc.tool_version},
           {"command", doc.command},
           {"input_spec", doc.input_spec},
           {"sampling", sampling_to_json(doc.sampling)},
           {"seed", doc.seed},
           {"timing_ms", doc.timing_ms},
           {"norm_reports", norm_reports},
           {"certificates", certificates},
           {"suites", suites}};
    if (doc.lens_demo) j["lens_demo"] = lens_demo_to_json(*doc.lens_demo);
    if (doc.failure) {
        json f{{"message", doc.failure->message}};
        if (doc.failure->point) f["point"] = complex_to_json(*doc.failure->point);
        j["failure"] = f;
    }
    return j.dump(indent);
}

ReportDocument report_from_json(const std::string& text) {
    const json j = json::parse(text);
    check_keys(j,
               {"schema_version", "tool_name", "tool_version", "command", "input_spec",
                "sampling", "seed", "timing_ms", "norm_reports", "certificates",
                "suites", "lens_demo", "failure"},
               "report");
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion) {
        throw Error("unsupported schema_version " + std::to_string(doc.schema_version));
    }
    doc.tool_name = j.at("tool_name").get<std::string>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.input_spec = j.at("input_spec").get<std::string>();
    doc.sampling = sampling_from_json(j.at("sampling"));
    doc.seed = j.at("seed").get<std::uint64_t>();
    doc.timing_ms = j.at("timing_ms").get<double>();
    for (const auto& n : j.at("norm_reports")) {
        doc.norm_reports.push_back(norm_report_from_json(n));
    }
    for (const auto& c : j.at("certificates")) {
        doc.certificates.push_back(certificate_from_json(c));
    }
    for (const auto& s : j.at("suites")) {
        doc.suites.push_back(suite_from_json(s));
    }
    if (j.contains("lens_demo")) doc.lens_demo = lens_demo_from_json(j.at("lens_demo"));
    if (j.contains("failure")) {
        check_keys(j.at("failure"), {"message", "point"}, "failure");
        EvaluationFailure f;
        f.message = j.at("failure").at("message").get<std::string>();
        if (j.at("failure").contains("point")) {
            f.point = complex_from_json(j.at("failure").at("point"));
        }
        doc.failure = f;
    }
    return doc;
}

}  // namespace schwlab
