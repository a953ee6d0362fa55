#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schwlab/property_suites.hpp"
#include "schwlab/schwarzian.hpp"

using namespace schwlab;

TEST_CASE("classical Schwarzian null set and closed forms") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const AnalyticMap T = verify::random_mobius(rng);
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(schwarzian_analytic(T, z)) <= 1e-12);
    }

    const AnalyticMap k = AnalyticMap::koebe();
    CHECK(std::abs(schwarzian_analytic(k, 0.0) - Complex(-6.0)) <= 1e-13);
    for (int i = 0; i < 40; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        const Complex expected = oracle::koebe_schwarzian(z);
        CHECK(std::abs(schwarzian_analytic(k, z) - expected) <=
              1e-10 * std::max(1.0, std::abs(expected)));
    }

    const AnalyticMap e = map_exp(AnalyticMap::identity());
    for (int i = 0; i < 10; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(schwarzian_analytic(e, z) - Complex(-0.5)) <= 1e-12);
    }
}

TEST_CASE("expanded form agrees with the nested derivative form") {
    // S = (f''/f')' - (1/2)(f''/f')^2, with the outer derivative taken by
    // finite differences of the pre-Schwarzian.
    std::mt19937_64 rng(32);
    const AnalyticMap maps[] = {AnalyticMap::koebe(), make_lens_map(0.4),
                                verify::random_mobius(rng),
                                map_exp(scale(Complex(0.7, 0.2), AnalyticMap::identity()))};
    for (const AnalyticMap& m : maps) {
        for (int i = 0; i < 25; ++i) {
            const Complex z = verify::random_disk_point(rng, 0.85);
            const Complex q = pre_schwarzian(m, z);
            const Complex qp =
                oracle::fd4([&m](Complex w) { return pre_schwarzian(m, w); }, z);
            const Complex nested = qp - 0.5 * q * q;
            const Complex expanded = schwarzian_analytic(m, z);
            CHECK(std::abs(nested - expanded) <=
                  1e-6 * std::max(1.0, std::abs(expanded)));
        }
    }
}

TEST_CASE("pre-Schwarzian") {
    CHECK(std::abs(pre_schwarzian(AnalyticMap::identity(), 0.3)) <= 1e-15);
    CHECK(std::abs(pre_schwarzian(map_exp(AnalyticMap::identity()), Complex(0.1, 0.2)) -
                   Complex(1.0)) <= 1e-14);
    CHECK(std::abs(pre_schwarzian(AnalyticMap::koebe(), 0.0) - Complex(4.0)) <= 1e-14);
}

TEST_CASE("harmonic Schwarzian reduces to the analytic one for g = 0") {
    std::mt19937_64 rng(33);
    const AnalyticMap zero = AnalyticMap::constant(0.0);
    const AnalyticMap maps[] = {AnalyticMap::koebe(), make_lens_map(0.6),
                                verify::random_mobius(rng)};
    for (const AnalyticMap& h : maps) {
        const HarmonicMap f(h, zero);
        for (int i = 0; i < 100; ++i) {
            const Complex z = verify::random_disk_point(rng, 0.9);
            const Complex analytic = schwarzian_analytic(h, z);
            const Complex harmonic = schwarzian_harmonic(f, z);
            CHECK(std::abs(analytic - harmonic) <= 1e-14 * std::max(1.0, std::abs(analytic)));
        }
    }
}

TEST_CASE("harmonic null set: alpha T + beta conj(T)") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const AnalyticMap T = verify::random_mobius(rng);
        const Complex alpha = std::polar(0.7 + u(rng), 2.0 * M_PI * u(rng));
        const Complex beta = std::polar(std::abs(alpha) * 0.8 * u(rng), 2.0 * M_PI * u(rng));
        // f = alpha T + beta conj(T): parts (alpha T, conj(beta) T)
        const HarmonicMap f(scale(alpha, T), scale(std::conj(beta), T));
        for (int k = 0; k < 4; ++k) {
            const Complex z = verify::random_disk_point(rng, 0.9);
            CHECK(std::abs(schwarzian_harmonic(f, z)) <= 1e-10);
        }
    }
}

TEST_CASE("lens shear Schwarzian vanishes at the origin") {
    const HarmonicMap f(AnalyticMap::identity(), antiderivative(make_lens_map(0.3)));
    CHECK(std::abs(schwarzian_harmonic(f, 0.0)) <= 1e-14);
}

TEST_CASE("dilatation on the boundary is an error, not a value") {
    // constant dilatation with modulus so close to 1 that 1 - |w|^2 <= 1e-12
    const double c = 1.0 - 4e-14;
    const HarmonicMap f(AnalyticMap::identity(),
                        scale(c, AnalyticMap::identity()));
    CHECK_THROWS_AS(schwarzian_harmonic(f, 0.2), DilatationOnBoundary);

    // sense-reversing input: the conjugate of a sense-preserving map swaps
    // the parts, pushing |omega| above 1
    std::mt19937_64 rng(35);
    const HarmonicMap g = verify::random_harmonic_map(rng);
    const HarmonicMap conj_g(g.coanalytic_part(), g.analytic_part());
    SamplingSpec small;
    small.n_radii = 8;
    small.n_angles = 16;
    small.refine_rounds = 0;
    CHECK_FALSE(is_sense_preserving(conj_g, small).sense_preserving);
    CHECK_THROWS_AS(schwarzian_harmonic(conj_g, 0.4), DilatationOnBoundary);
}

TEST_CASE("weighted magnitude") {
    CHECK(weighted_magnitude(0.0, Complex(0.3, 0.2)) == 0.0);
    CHECK(weighted_magnitude(Complex(-6.0, 0.0), 0.0) == doctest::Approx(6.0));
    CHECK(weighted_magnitude(Complex(-0.5, 0.0), 0.0) == doctest::Approx(0.5));
    // attaches the evaluation point on samples
    const HarmonicMap f(AnalyticMap::koebe(), AnalyticMap::constant(0.0));
    const SchwarzianSample s = sample_harmonic(f, 0.0);
    CHECK(s.weighted == doctest::Approx(6.0));
    CHECK(s.value.real() == doctest::Approx(-6.0));
}

TEST_CASE("chain rule and affine invariance pointwise") {
    const verify::SuiteResult chain = verify::run_chain_rule(120, 4242);
    CHECK(chain.passed());
    CHECK(chain.max_residual <= 1e-9);

    const verify::SuiteResult affine = verify::run_affine_invariance(120, 4243);
    CHECK(affine.passed());
    CHECK(affine.max_residual <= 1e-10);
    CHECK(affine.rejected > 0);  // some |b| > |a| draws were generated and rejected
}

TEST_CASE("errors carry the evaluation point") {
    const HarmonicMap crit(AnalyticMap::identity() * AnalyticMap::identity(),
                           AnalyticMap::constant(0.0));
    try {
        schwarzian_harmonic(crit, 0.0);
        FAIL("expected DivisionNearZero");
    } catch (const DivisionNearZero& e) {
        REQUIRE(e.point().has_value());
        CHECK(std::abs(*e.point()) <= 1e-15);
    }
}
