#include "schwlab/property_suites.hpp"

#include <cmath>
#include <sstream>

#include "schwlab/finite_difference.hpp"
#include "schwlab/norm_estimation.hpp"
#include "schwlab/schwarzian.hpp"

namespace schwlab::verify {
namespace {

void record(SuiteResult& result, std::uint64_t case_seed, double residual,
            const std::string& detail) {
    result.max_residual = std::max(result.max_residual, residual);
    if (residual > result.tolerance) {
        result.failures.push_back(CaseFailure{case_seed, residual, detail});
    }
}

std::string describe_case(const char* what, Complex z) {
    std::ostringstream os;
    os << what << " at z = " << z.real() << (z.imag() < 0 ? "-" : "+")
       << std::abs(z.imag()) << "i";
    return os.str();
}

}  // namespace

Complex random_disk_point(std::mt19937_64& rng, double r_max) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(r_max * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
}

AnalyticMap random_mobius(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // u * sigma + v with sigma an automorphism: generic Mobius whose pole
    // stays outside the closed disk.
    const Complex zeta = random_disk_point(rng, 0.7);
    const double theta = 2.0 * M_PI * unit(rng);
    const Complex u = std::polar(0.5 + unit(rng), 2.0 * M_PI * unit(rng));
    const Complex v = random_disk_point(rng, 1.0);
    const Complex phase = std::polar(1.0, theta);
    const Complex p = phase, q = phase * zeta, r = std::conj(zeta), s = 1.0;
    return make_mobius(MobiusParams{u * p + v * r, u * q + v * s, r, s});
}

AnalyticMap random_automorphism(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return make_disk_automorphism(random_disk_point(rng, 0.7),
                                  2.0 * M_PI * unit(rng));
}

AnalyticMap random_self_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int kind = static_cast<int>(3.0 * unit(rng)) % 3;
    AnalyticMap a = random_automorphism(rng);
    AnalyticMap b = random_automorphism(rng);
    switch (kind) {
        case 0: return a;
        case 1: return a * b;
        default: return compose(a, b * b);
    }
}

HarmonicMap random_harmonic_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // h' = exp(c1 z + c2 z^2) never vanishes; |omega| <= 0.75 keeps the
    // dilatation well inside the disk.
    const Complex c1 = random_disk_point(rng, 0.5);
    const Complex c2 = random_disk_point(rng, 0.35);
    const AnalyticMap id = AnalyticMap::identity();
    const AnalyticMap poly = scale(c1, id) + scale(c2, id * id);
    const AnalyticMap h = antiderivative(map_exp(poly));

    const double rho = 0.2 + 0.55 * unit(rng);
    const Complex phase = std::polar(1.0, 2.0 * M_PI * unit(rng));
    const AnalyticMap omega =
        scale(rho * phase, make_disk_automorphism(random_disk_point(rng, 0.6), 0.0));
    const AnalyticMap g = antiderivative(omega * map_exp(poly));
    return HarmonicMap(h, g);
}

SamplingSpec schwarz_pick_spec() {
    SamplingSpec spec;
    spec.r_max = 1.0 - 1e-4;
    spec.refine_rounds = 2;
    return spec;
}

SuiteResult run_chain_rule(int n_cases, std::uint64_t seed) {
    SuiteResult result{"chain_rule", n_cases, 0, 1e-9, 0.0, {}};
    for (int i = 0; i < n_cases; ++i) {
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(case_seed);
        const HarmonicMap f = random_harmonic_map(rng);
        const AnalyticMap phi = random_automorphism(rng);
        const Complex z = random_disk_point(rng, 0.92);

        const Complex lhs = schwarzian_harmonic(precompose(f, phi), z);
        const Jet3 phi_jet = phi(z);
        // phi is Mobius, so S(phi) = 0 and the composition rule sharpens to
        // S_{f o phi} = S_f(phi) phi'^2.
        const Complex rhs =
            schwarzian_harmonic(f, phi_jet.d0) * phi_jet.d1 * phi_jet.d1;
        record(result, case_seed, std::abs(lhs - rhs), describe_case("chain rule", z));
    }
    return result;
}

SuiteResult run_affine_invariance(int n_cases, std::uint64_t seed) {
    SuiteResult result{"affine_invariance", n_cases, 0, 1e-10, 0.0, {}};
    for (int i = 0; i < n_cases; ++i) {
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(case_seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const HarmonicMap f = random_harmonic_map(rng);
        const Complex z = random_disk_point(rng, 0.92);

        // One case in five draws |b| > |a|; those are sense-reversing and the
        // Jacobian guard must reject them.
        const bool reversed = unit(rng) < 0.2;
        const Complex a = std::polar(0.6 + 0.4 * unit(rng), 2.0 * M_PI * unit(rng));
        const double b_mod = reversed ? std::abs(a) * (1.1 + unit(rng))
                                      : std::abs(a) * 0.8 * unit(rng);
        const Complex b = std::polar(b_mod, 2.0 * M_PI * unit(rng));

        // L o f = a f + b conj(f) has parts (a h + b g, conj(b) h + conj(a) g).
        const HarmonicMap lf(
            scale(a, f.analytic_part()) + scale(b, f.coanalytic_part()),
            scale(std::conj(b), f.analytic_part()) +
                scale(std::conj(a), f.coanalytic_part()));

        if (reversed) {
            if (lf.jacobian(z) < 0.0) {
                ++result.rejected;
            } else {
                result.failures.push_back(CaseFailure{
                    case_seed, lf.jacobian(z),
                    describe_case("sense-reversing input not rejected", z)});
            }
            continue;
        }
        const Complex lhs = schwarzian_harmonic(lf, z);
        const Complex rhs = schwarzian_harmonic(f, z);
        record(result, case_seed, std::abs(lhs - rhs),
               describe_case("affine invariance", z));
    }
    return result;
}

SuiteResult run_norm_automorphism(int n_pairs, std::uint64_t seed,
                                  const SamplingSpec& spec) {
    SuiteResult result{"norm_automorphism", n_pairs, 0, 1e-3, 0.0, {}};
    for (int i = 0; i < n_pairs; ++i) {
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(case_seed);
        const HarmonicMap f = random_harmonic_map(rng);
        const AnalyticMap sigma = random_automorphism(rng);

        const double base = estimate_schwarzian_norm(f, spec).estimate;
        const double moved = estimate_schwarzian_norm(precompose(f, sigma), spec).estimate;
        const double rel = std::abs(base - moved) / std::max({base, moved, 1e-12});
        record(result, case_seed, rel, "norm invariance under precomposition");
    }
    return result;
}

SuiteResult run_schwarz_pick(int n_cases, std::uint64_t seed, const SamplingSpec& spec) {
    SuiteResult result{"schwarz_pick", n_cases, 0, 1e-9, 0.0, {}};
    for (int i = 0; i < n_cases; ++i) {
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(case_seed);
        const AnalyticMap omega = random_self_map(rng);
        const double estimate = estimate_omega_star_norm(omega, spec).estimate;
        record(result, case_seed, std::max(0.0, estimate - 1.0),
               "hyperbolic derivative norm above 1 for " + omega.descriptor());
    }
    return result;
}

SuiteResult run_jets_vs_fd(int n_cases, std::uint64_t seed) {
    SuiteResult result{"jets_vs_fd", n_cases, 0, 1e-6, 0.0, {}};
    const double step = 1e-4;
    for (int i = 0; i < n_cases; ++i) {
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(case_seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        const AnalyticMap ell = make_mobius(MobiusParams{1.0, 1.0, -1.0, 1.0});
        AnalyticMap map = AnalyticMap::identity();
        switch (static_cast<int>(7.0 * unit(rng)) % 7) {
            case 0: map = random_mobius(rng); break;
            case 1: map = map_exp(scale(random_disk_point(rng, 1.0),
                                        AnalyticMap::identity())); break;
            case 2: map = map_log(ell); break;
            case 3: map = map_pow(ell, 0.1 + 0.9 * unit(rng)); break;
            case 4: map = make_lens_map(0.1 + 0.9 * unit(rng)); break;
            case 5: map = AnalyticMap::koebe(); break;
            default: map = compose(AnalyticMap::koebe(), random_automorphism(rng));
        }
        const Complex z = random_disk_point(rng, 0.9);

        const Jet3 jet = map(z);
        const Complex targets[3] = {jet.d1, jet.d2, jet.d3};
        for (int order = 0; order < 3; ++order) {
            const Complex fd = central_difference(
                [&map, order](Complex w) {
                    const Jet3 j = map(w);
                    return order == 0 ? j.d0 : (order == 1 ? j.d1 : j.d2);
                },
                z, step);
            const double rel = std::abs(fd - targets[order]) /
                               std::max(1.0, std::abs(targets[order]));
            record(result, case_seed, rel,
                   describe_case(("jet order " + std::to_string(order + 1) +
                                  " vs finite difference for " + map.descriptor())
                                     .c_str(),
                                 z));
        }
    }
    return result;
}

SuiteResult run_suite(const std::string& name, int n_cases, std::uint64_t seed) {
    if (name == "chain_rule") return run_chain_rule(n_cases, seed);
    if (name == "affine_invariance") return run_affine_invariance(n_cases, seed);
    if (name == "norm_automorphism") return run_norm_automorphism(n_cases, seed);
    if (name == "schwarz_pick") return run_schwarz_pick(n_cases, seed);
    if (name == "jets_vs_fd") return run_jets_vs_fd(n_cases, seed);
    throw Error("unknown verification suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"chain_rule", "affine_invariance", "norm_automorphism", "schwarz_pick",
            "jets_vs_fd"};
}

}  // namespace schwlab::verify
