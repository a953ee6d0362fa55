#include "doctest.h"
#include "schwlab/report.hpp"

#include "json.hpp"

using namespace schwlab;

namespace {

ReportDocument make_full_document() {
    ReportDocument doc;
    doc.command = "norm";
    doc.input_spec = "h=koebe(); g=0";
    doc.seed = 424242;
    doc.timing_ms = 12.75;

    NamedNormReport n;
    n.name = "schwarzian";
    n.report.lower_bound = 5.9999999991;
    n.report.estimate = 6.000000000123;
    n.report.argmax = Complex(0.998, -1.25e-16);
    n.report.converged = true;
    n.report.samples_used = 16996;
    doc.norm_reports.push_back(n);

    Certificate c = Certificate::make_refuted("nehari", 6.0, 2.0, Complex(0.998, 0.0),
                                              "criterion not satisfied");
    c.witness2 = Complex(-0.998, 0.0);
    doc.certificates.push_back(c);
    doc.certificates.push_back(
        Certificate::make_certified("family_membership", 0.1, 0.5, "one-sided"));

    SuiteSummary s;
    s.suite = "chain_rule";
    s.cases = 500;
    s.tolerance = 1e-9;
    s.max_residual = 3.2e-13;
    s.passed = true;
    doc.suites.push_back(s);

    LensDemoSection demo;
    demo.alpha = 0.25;
    demo.t = 0.5;
    demo.omega_star = 0.25;
    demo.schwarzian_norm = 0.4855;
    demo.sup_modulus = 0.999993;
    demo.boundary_degenerate = true;
    demo.empirical_k2 = 1.70124;
    demo.bound_first_term = 0.42531;
    demo.bound_second_term = 0.09375;
    demo.norm_within_bound = true;
    demo.qc_verdict = "refuted";
    doc.lens_demo = demo;

    doc.failure = EvaluationFailure{"example failure", Complex(0.5, 0.5)};
    return doc;
}

}  // namespace

TEST_CASE("round trip is lossless") {
    const ReportDocument doc = make_full_document();
    const std::string text = to_json_string(doc);
    const ReportDocument back = report_from_json(text);
    CHECK(back == doc);
    // and a second trip is bit-identical
    CHECK(to_json_string(back) == text);
}

TEST_CASE("awkward doubles survive") {
    ReportDocument doc;
    doc.command = "norm";
    NamedNormReport n;
    n.name = "omega_star";
    n.report.lower_bound = 0.1;  // not exactly representable
    n.report.estimate = 1e-300;
    n.report.argmax = Complex(1.0 / 3.0, -2.0 / 7.0);
    doc.norm_reports.push_back(n);
    CHECK(report_from_json(to_json_string(doc)) == doc);
}

TEST_CASE("unknown fields are rejected") {
    const std::string text = to_json_string(make_full_document());
    nlohmann::json j = nlohmann::json::parse(text);
    j["surprise"] = 1;
    CHECK_THROWS_AS(report_from_json(j.dump()), Error);

    nlohmann::json j2 = nlohmann::json::parse(text);
    j2["certificates"][0]["extra"] = "x";
    CHECK_THROWS_AS(report_from_json(j2.dump()), Error);

    nlohmann::json j3 = nlohmann::json::parse(text);
    j3["sampling"]["bogus"] = 2;
    CHECK_THROWS_AS(report_from_json(j3.dump()), Error);
}

TEST_CASE("schema version is enforced") {
    nlohmann::json j = nlohmann::json::parse(to_json_string(make_full_document()));
    j["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(j.dump()), Error);
}

TEST_CASE("absent optionals stay absent") {
    ReportDocument doc;
    doc.command = "verify";
    const std::string text = to_json_string(doc);
    CHECK(text.find("lens_demo") == std::string::npos);
    CHECK(text.find("failure") == std::string::npos);
    const ReportDocument back = report_from_json(text);
    CHECK_FALSE(back.lens_demo.has_value());
    CHECK_FALSE(back.failure.has_value());
    CHECK(back == doc);
}
