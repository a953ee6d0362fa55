#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schwlab/harmonic_map.hpp"
#include "schwlab/sampling.hpp"

namespace schwlab::verify {

struct CaseFailure {
    std::uint64_t seed = 0;
    double residual = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    int rejected = 0;  // guard-rejected inputs, counted separately from failures
    double tolerance = 0.0;
    double max_residual = 0.0;
    std::vector<CaseFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Deterministic corpus generators. Every map they produce is evaluable on
// the whole open disk (Mobius poles kept outside, dilatations bounded away
// from modulus 1) except the Blaschke-type self-maps, whose modulus tends
// to 1 at the boundary by design.
Complex random_disk_point(std::mt19937_64& rng, double r_max = 0.9);
AnalyticMap random_mobius(std::mt19937_64& rng);
AnalyticMap random_automorphism(std::mt19937_64& rng);
AnalyticMap random_self_map(std::mt19937_64& rng);
HarmonicMap random_harmonic_map(std::mt19937_64& rng);

// Grid used by the Schwarz-Pick suite: r_max backed off to 1e-4 from the
// boundary so that 1 - |omega|^2 stays clear of cancellation noise.
SamplingSpec schwarz_pick_spec();

SuiteResult run_chain_rule(int n_cases, std::uint64_t seed);
SuiteResult run_affine_invariance(int n_cases, std::uint64_t seed);
SuiteResult run_norm_automorphism(int n_pairs, std::uint64_t seed,
                                  const SamplingSpec& spec = {});
SuiteResult run_schwarz_pick(int n_cases, std::uint64_t seed,
                             const SamplingSpec& spec = schwarz_pick_spec());
SuiteResult run_jets_vs_fd(int n_cases, std::uint64_t seed);

// Dispatch by name: chain_rule, affine_invariance, norm_automorphism,
// schwarz_pick, jets_vs_fd. Throws Error for unknown names.
SuiteResult run_suite(const std::string& name, int n_cases, std::uint64_t seed);
std::vector<std::string> suite_names();

}  // namespace schwlab::verify
