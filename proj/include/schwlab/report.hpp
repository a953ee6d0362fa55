#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schwlab/criteria.hpp"
#include "schwlab/norm_estimation.hpp"
#include "schwlab/version.hpp"

namespace schwlab {

struct NamedNormReport {
    std::string name;  // schwarzian | omega_star | omega_second | omega_sup
    NormReport report;

    bool operator==(const NamedNormReport&) const = default;
};

struct SuiteCaseFailure {
    std::uint64_t seed = 0;
    double residual = 0.0;
    std::string detail;

    bool operator==(const SuiteCaseFailure&) const = default;
};

struct SuiteSummary {
    std::string suite;
    int cases = 0;
    int rejected = 0;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool passed = false;
    std::vector<SuiteCaseFailure> failures;

    bool operator==(const SuiteSummary&) const = default;
};

struct LensDemoSection {
    double alpha = 0.0;
    double t = 0.0;
    double omega_star = 0.0;
    double schwarzian_norm = 0.0;
    double sup_modulus = 0.0;
    bool boundary_degenerate = false;
    double empirical_k2 = 0.0;
    double bound_first_term = 0.0;   // empirical_k2 * alpha
    double bound_second_term = 0.0;  // 1.5 alpha^2
    bool norm_within_bound = false;
    std::string qc_verdict;

    bool operator==(const LensDemoSection&) const = default;
};

struct EvaluationFailure {
    std::string message;
    std::optional<Complex> point;

    bool operator==(const EvaluationFailure&) const = default;
};

// Everything a CLI invocation reports. Serializes to JSON losslessly;
// parsing rejects unknown fields.
struct ReportDocument {
    int schema_version = kSchemaVersion;
    std::string tool_name = kToolName;
    std::string tool_version = kToolVersion;
    std::string command;
    std::string input_spec;
    SamplingSpec sampling;
    std::uint64_t seed = 0;
    double timing_ms = 0.0;
    std::vector<NamedNormReport> norm_reports;
    std::vector<Certificate> certificates;
    std::vector<SuiteSummary> suites;
    std::optional<LensDemoSection> lens_demo;
    std::optional<EvaluationFailure> failure;

    bool operator==(const ReportDocument&) const = default;
};

std::string to_json_string(const ReportDocument& doc, int indent = 2);
ReportDocument report_from_json(const std::string& text);

}  // namespace schwlab
