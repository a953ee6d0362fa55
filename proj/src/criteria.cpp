#include "schwlab/criteria.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "schwlab/schwarzian.hpp"

namespace schwlab {

namespace {

constexpr const char* kOneSidedCaveat =
    "sup-norm estimate is one-sided: the measured value certifies a lower bound on "
    "the norm, the inequality was checked against the extrapolated estimate";

std::string format_point(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Certificate Certificate::make_certified(std::string criterion, double measured,
                                        double threshold, std::string caveat) {
    if (caveat.empty()) {
        throw std::logic_error("a certified verdict requires a non-empty caveat");
    }
    return Certificate{Verdict::certified, std::move(criterion), measured, threshold,
                       std::nullopt, std::nullopt, std::move(caveat)};
}

Certificate Certificate::make_refuted(std::string criterion, double measured,
                                      double threshold, Complex witness,
                                      std::string caveat) {
    return Certificate{Verdict::refuted, std::move(criterion), measured, threshold,
                       witness, std::nullopt, std::move(caveat)};
}

Certificate Certificate::make_inconclusive(std::string criterion, double measured,
                                           double threshold, std::string caveat) {
    return Certificate{Verdict::inconclusive, std::move(criterion), measured, threshold,
                       std::nullopt, std::nullopt, std::move(caveat)};
}

Certificate nehari_check(const AnalyticMap& h, const SamplingSpec& spec) {
    const HarmonicMap as_harmonic(h, AnalyticMap::constant(0.0));
    const NormReport report = estimate_schwarzian_norm(as_harmonic, spec);
    if (report.lower_bound > 2.0) {
        return Certificate::make_refuted(
            "nehari", report.lower_bound, 2.0, report.argmax,
            "criterion not satisfied: the Schwarzian norm exceeds 2 at the witness; "
            "the criterion is sufficient only, so nothing follows about univalence");
    }
    if (report.estimate <= 2.0) {
        return Certificate::make_certified("nehari", report.estimate, 2.0,
                                           kOneSidedCaveat);
    }
    return Certificate::make_inconclusive(
        "nehari", report.estimate, 2.0,
        "estimate exceeds 2 but no sampled point does; grid cannot decide");
}

double ahlfors_weill_K(double t) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw InvalidT("Ahlfors-Weill parameter must lie in [0, 1), got " +
                       std::to_string(t));
    }
    return (1.0 + t) / (1.0 - t);
}

Certificate harmonic_univalence_check(const HarmonicMap& f, double delta,
                                      const SamplingSpec& spec,
                                      bool affine_slice_subcheck) {
    if (!(delta > 0.0)) {
        throw InvalidDelta("delta must be positive, got " + std::to_string(delta));
    }
    const NormReport report = estimate_schwarzian_norm(f, spec);

    std::string subcheck_note;
    if (affine_slice_subcheck) {
        // Nehari on the analytic slices h + a g over sampled |a| <= 1.
        int passed = 0, total = 0;
        for (double radius : {0.5, 1.0}) {
            for (int k = 0; k < 4; ++k) {
                const Complex a = std::polar(radius, 2.0 * M_PI * k / 4.0);
                const AnalyticMap slice =
                    f.analytic_part() + scale(a, f.coanalytic_part());
                ++total;
                if (nehari_check(slice, spec).verdict == Verdict::certified) ++passed;
            }
        }
        std::ostringstream os;
        os << "; affine-slice Nehari sub-check: " << passed << "/" << total
           << " slices satisfied";
        subcheck_note = os.str();
    }

    if (report.lower_bound > delta) {
        return Certificate::make_refuted(
            "harmonic_univalence", report.lower_bound, delta, report.argmax,
            "the hypothesis ||S_f|| <= delta fails at the witness; this refutes the "
            "hypothesis only, not univalence of f" + subcheck_note);
    }
    if (report.estimate <= delta) {
        return Certificate::make_certified(
            "harmonic_univalence", report.estimate, delta,
            std::string("conditional on the supplied delta not exceeding the universal "
                        "univalence threshold, which has no published value; ") +
                kOneSidedCaveat + subcheck_note);
    }
    return Certificate::make_inconclusive(
        "harmonic_univalence", report.estimate, delta,
        "estimate exceeds delta but no sampled point does" + subcheck_note);
}

Certificate qc_extension_check(const HarmonicMap& f, double delta, double t,
                               const SamplingSpec& spec, double boundary_tol) {
    if (!(t > 0.0 && t < 1.0)) {
        throw InvalidT("qc extension parameter t must lie in (0, 1), got " +
                       std::to_string(t));
    }
    if (!(delta > 0.0)) {
        throw InvalidDelta("delta must be positive, got " + std::to_string(delta));
    }
    const double threshold = delta * t;
    const NormReport schwarzian = estimate_schwarzian_norm(f, spec);
    const NormReport dilatation = estimate_sup_modulus(f.dilatation_map(), spec);

    if (dilatation.boundary_degenerate ||
        dilatation.estimate >= 1.0 - boundary_tol) {
        return Certificate::make_refuted(
            "qc_extension", dilatation.estimate, 1.0 - boundary_tol, dilatation.argmax,
            "the dilatation sup-norm reaches 1 (sup|omega| estimate " +
                std::to_string(dilatation.estimate) +
                "); the bounded-dilatation hypothesis fails and it cannot be dropped, "
                "so no quasiconformal extension follows even though ||S_f|| is small");
    }
    if (schwarzian.lower_bound > threshold) {
        return Certificate::make_refuted(
            "qc_extension", schwarzian.lower_bound, threshold, schwarzian.argmax,
            "||S_f|| exceeds delta*t at the witness; the hypothesis fails, which does "
            "not itself rule out an extension");
    }
    if (schwarzian.estimate <= threshold) {
        return Certificate::make_certified(
            "qc_extension", schwarzian.estimate, threshold,
            std::string("conditional on the supplied delta not exceeding the universal "
                        "threshold; distortion bound K = ") +
                std::to_string(ahlfors_weill_K(t)) + "; " + kOneSidedCaveat +
                "; sup|omega| estimate " + std::to_string(dilatation.estimate));
    }
    return Certificate::make_inconclusive(
        "qc_extension", schwarzian.estimate, threshold,
        "||S_f|| estimate exceeds delta*t but no sampled point does");
}

Certificate family_membership(const HarmonicMap& f, const FamilySpec& family,
                              const SamplingSpec& sampling) {
    constexpr double kNormalizationTol = 1e-12;
    const Jet3 h0 = f.analytic_part()(0.0);
    const Jet3 g0 = f.coanalytic_part()(0.0);

    if (family.normalized) {
        if (std::abs(h0.d0) > kNormalizationTol || std::abs(g0.d0) > kNormalizationTol ||
            std::abs(h0.d1 - 1.0) > kNormalizationTol) {
            return Certificate::make_refuted(
                "family_membership", std::abs(h0.d0) + std::abs(g0.d0) +
                    std::abs(h0.d1 - 1.0),
                kNormalizationTol, Complex(0.0),
                "normalization h(0) = g(0) = 0, h'(0) = 1 fails at the origin");
        }
    }
    if (family.zero_dilatation_at_origin && std::abs(g0.d1) > kNormalizationTol) {
        return Certificate::make_refuted(
            "family_membership", std::abs(g0.d1), kNormalizationTol, Complex(0.0),
            "subfamily requires g'(0) = 0");
    }

    const NormReport report = estimate_schwarzian_norm(f, sampling);
    if (report.lower_bound > family.lambda) {
        return Certificate::make_refuted(
            "family_membership", report.lower_bound, family.lambda, report.argmax,
            "Schwarzian norm exceeds lambda at the witness");
    }
    if (report.estimate <= family.lambda) {
        return Certificate::make_certified("family_membership", report.estimate,
                                           family.lambda, kOneSidedCaveat);
    }
    return Certificate::make_inconclusive(
        "family_membership", report.estimate, family.lambda,
        "estimate exceeds lambda but no sampled point does");
}

Certificate injectivity_sample(const HarmonicMap& f, int n_points, std::uint64_t seed,
                               double collision_tol, double separation_tol) {
    if (n_points < 2) {
        throw std::invalid_argument("injectivity sampling needs at least 2 points");
    }
    // Seed-derived points, each paired with its antipode: even symmetry
    // (f(z) = f(-z)) is the most common failure and pure uniform sampling
    // essentially never lands on an exact collision of it.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> args;
    args.reserve(n_points);
    while (static_cast<int>(args.size()) < n_points) {
        const double r = 0.97 * std::sqrt(unit(rng));
        const double th = 2.0 * M_PI * unit(rng);
        const Complex z = std::polar(r, th);
        args.push_back(z);
        if (static_cast<int>(args.size()) < n_points) args.push_back(-z);
    }

    struct CellKey {
        long long x, y;
        bool operator==(const CellKey& o) const { return x == o.x && y == o.y; }
    };
    struct CellHash {
        std::size_t operator()(const CellKey& k) const {
            return std::hash<long long>()(k.x * 1000003LL ^ k.y);
        }
    };

    const double cell = std::max(collision_tol, 1e-12);
    std::unordered_map<CellKey, std::vector<int>, CellHash> buckets;
    std::vector<Complex> images(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        images[i] = f.eval(args[i]);
    }
    for (int i = 0; i < static_cast<int>(args.size()); ++i) {
        const CellKey key{static_cast<long long>(std::floor(images[i].real() / cell)),
                          static_cast<long long>(std::floor(images[i].imag() / cell))};
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                const auto it = buckets.find(CellKey{key.x + dx, key.y + dy});
                if (it == buckets.end()) continue;
                for (int j : it->second) {
                    if (std::abs(images[i] - images[j]) <= collision_tol &&
                        std::abs(args[i] - args[j]) > separation_tol) {
                        Certificate c = Certificate::make_refuted(
                            "injectivity_sample", std::abs(images[i] - images[j]),
                            collision_tol, args[j],
                            "two well-separated arguments map to images within the "
                            "collision tolerance: " +
                                format_point(args[j]) + " and " + format_point(args[i]));
                        c.witness2 = args[i];
                        return c;
                    }
                }
            }
        }
        buckets[key].push_back(i);
    }
    return Certificate::make_inconclusive(
        "injectivity_sample", 0.0, collision_tol,
        "no collisions among " + std::to_string(args.size()) +
            " sampled points; sampling cannot certify injectivity");
}

}  // namespace schwlab
