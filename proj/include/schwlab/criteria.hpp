#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "schwlab/norm_estimation.hpp"

namespace schwlab {

enum class Verdict { certified, refuted, inconclusive };

const char* to_string(Verdict v);

// Outcome of a criterion check. Sup norms are only ever certified from
// one-sided estimates, so a certified verdict built from an estimate must
// carry a caveat saying so; make_certified enforces that.
struct Certificate {
    Verdict verdict;
    std::string criterion;
    double measured = 0.0;
    double threshold = 0.0;
    std::optional<Complex> witness;
    std::optional<Complex> witness2;
    std::string caveat;

    static Certificate make_certified(std::string criterion, double measured,
                                      double threshold, std::string caveat);
    static Certificate make_refuted(std::string criterion, double measured,
                                    double threshold, Complex witness,
                                    std::string caveat = {});
    static Certificate make_inconclusive(std::string criterion, double measured,
                                         double threshold, std::string caveat);

    bool operator==(const Certificate&) const = default;
};

// Membership spec for the families of normalized sense-preserving harmonic
// mappings with Schwarzian norm at most lambda; zero_dilatation_at_origin
// selects the subfamily with g'(0) = 0.
struct FamilySpec {
    double lambda = 0.0;
    bool normalized = true;
    bool zero_dilatation_at_origin = false;
};

// Schwarzian norm of an analytic map at most 2 implies global univalence.
// The criterion is sufficient, not necessary: a refuted certificate means
// the criterion is not satisfied, nothing more.
Certificate nehari_check(const AnalyticMap& h, const SamplingSpec& spec);

// Quasiconformal distortion bound (1+t)/(1-t) for 0 <= t < 1.
double ahlfors_weill_K(double t);

// ||S_f|| <= delta with a user-supplied delta. The universal threshold is
// known to exist but has no published value, so certification is always
// conditional on the caller's delta. Optionally also runs the Nehari check
// on the affine slices h + a g, |a| <= 1, and reports the outcome in the
// caveat.
Certificate harmonic_univalence_check(const HarmonicMap& f, double delta,
                                      const SamplingSpec& spec,
                                      bool affine_slice_subcheck = false);

// ||S_f|| <= delta * t together with sup|omega| < 1; both must hold. A
// dilatation sup reaching 1 refutes the hypothesis of this criterion (the
// bounded-dilatation assumption cannot be dropped), regardless of how small
// the Schwarzian norm is.
Certificate qc_extension_check(const HarmonicMap& f, double delta, double t,
                               const SamplingSpec& spec,
                               double boundary_tol = 1e-2);

Certificate family_membership(const HarmonicMap& f, const FamilySpec& family,
                              const SamplingSpec& sampling);

// Samples f at seed-derived disk points (with antipodal companions, which
// catch even symmetry) and looks for image collisions between well-separated
// arguments. Sampling can refute injectivity with a witness pair; it can
// never certify it, so the non-refuted verdict is inconclusive.
Certificate injectivity_sample(const HarmonicMap& f, int n_points, std::uint64_t seed,
                               double collision_tol = 1e-9,
                               double separation_tol = 1e-6);

}  // namespace schwlab
