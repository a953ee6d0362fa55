#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schwlab/harmonic_map.hpp"
#include "schwlab/property_suites.hpp"
#include "schwlab/schwarzian.hpp"

using namespace schwlab;

namespace {

void check_jets_close(const Jet3& a, const Jet3& b, double tol) {
    CHECK(std::abs(a.d0 - b.d0) <= tol);
    CHECK(std::abs(a.d1 - b.d1) <= tol);
    CHECK(std::abs(a.d2 - b.d2) <= tol);
    CHECK(std::abs(a.d3 - b.d3) <= tol);
}

}  // namespace

TEST_CASE("make_mobius") {
    const AnalyticMap id = make_mobius({1.0, 0.0, 0.0, 1.0});
    const Jet3 j = id(0.5);
    CHECK(j.d0 == Complex(0.5));
    CHECK(j.d1 == Complex(1.0));
    CHECK(j.d2 == Complex(0.0));
    CHECK(j.d3 == Complex(0.0));

    // z/(z+1) at 0: value 0, derivative det/(cz+d)^2 = 1
    const AnalyticMap m = make_mobius({1.0, 0.0, 1.0, 1.0});
    const Jet3 k = m(0.0);
    CHECK(std::abs(k.d0) <= 1e-15);
    CHECK(std::abs(k.d1 - 1.0) <= 1e-15);

    CHECK_THROWS_AS(make_mobius({1.0, 1.0, 1.0, 1.0}), DegenerateMobius);

    // pole inside the disk surfaces as DivisionNearZero at the pole
    const AnalyticMap pole = make_mobius({1.0, 0.0, 1.0, -0.5});
    CHECK_THROWS_AS(pole(0.5), DivisionNearZero);

    // evaluation outside the open disk is an error
    CHECK_THROWS_AS(id(Complex(1.0, 0.0)), PointOutsideDisk);
}

TEST_CASE("disk automorphisms") {
    const AnalyticMap id = make_disk_automorphism(0.0, 0.0);
    check_jets_close(id(Complex(0.3, 0.1)), Jet3::variable(Complex(0.3, 0.1)), 1e-15);

    const AnalyticMap sigma = make_disk_automorphism(0.5, 0.0);
    CHECK(std::abs(sigma(0.0).d0 - 0.5) <= 1e-15);

    CHECK_THROWS_AS(make_disk_automorphism(Complex(1.0, 0.0), 0.3), PointOutsideDisk);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const AnalyticMap s2 = make_disk_automorphism(Complex(0.4, -0.55), 1.3);
    for (int i = 0; i < 10000; ++i) {
        const Complex z = std::polar(std::sqrt(u(rng)) * 0.999, 2.0 * M_PI * u(rng));
        CHECK(std::abs(s2(z).d0) < 1.0);
    }
}

TEST_CASE("automorphism group closure") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const AnalyticMap s1 = verify::random_automorphism(rng);
        const AnalyticMap s2 = verify::random_automorphism(rng);
        const AnalyticMap comp = compose(s1, s2);

        // recover the parameters of the composite from its jet at 0
        const Jet3 at0 = comp(0.0);
        const double theta = std::arg(at0.d1);
        const Complex zeta = std::polar(1.0, -theta) * at0.d0;
        const AnalyticMap direct = make_disk_automorphism(zeta, theta);

        for (int k = 0; k < 25; ++k) {
            const Complex z = verify::random_disk_point(rng, 0.95);
            check_jets_close(comp(z), direct(z), 1e-12);
        }
    }
}

TEST_CASE("lens maps") {
    // alpha = 1 is the identity
    const AnalyticMap l1 = make_lens_map(1.0);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.95);
        check_jets_close(l1(z), Jet3::variable(z), 1e-12);
    }

    // any alpha fixes the origin
    for (double alpha : {0.1, 0.33, 0.8}) {
        CHECK(std::abs(make_lens_map(alpha)(0.0).d0) <= 1e-15);
    }

    // half-power case against the sqrt closed form
    const AnalyticMap lh = make_lens_map(0.5);
    CHECK(std::abs(lh(0.3).d0 - oracle::lens_half(0.3)) <= 1e-14);
    CHECK(std::abs(lh(Complex(0.1, -0.6)).d0 - oracle::lens_half(Complex(0.1, -0.6))) <=
          1e-14);

    CHECK_THROWS_AS(make_lens_map(0.0), InvalidAlpha);
    CHECK_THROWS_AS(make_lens_map(1.5), InvalidAlpha);
    CHECK_THROWS_AS(make_lens_map(-0.2), InvalidAlpha);
}

TEST_CASE("harmonic map basics and dilatation") {
    const HarmonicMap f(AnalyticMap::identity(), AnalyticMap::constant(0.0));
    CHECK(f.eval(Complex(0.2, 0.4)) == Complex(0.2, 0.4));
    check_jets_close(f.dilatation_jet(0.3), Jet3{}, 0.0);

    // the shear with g' = lens(alpha) has dilatation exactly lens(alpha)
    const AnalyticMap lens = make_lens_map(0.25);
    const HarmonicMap shear(AnalyticMap::identity(), antiderivative(lens));
    std::mt19937_64 rng(24);
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        const Jet3 w = shear.dilatation_jet(z);
        const Jet3 l = lens(z);
        CHECK(std::abs(w.d0 - l.d0) <= 1e-13);
        CHECK(std::abs(w.d1 - l.d1) <= 1e-13);
        CHECK(std::abs(w.d2 - l.d2) <= 1e-12);
    }

    // omega'' against finite differences for polynomial h, g
    const AnalyticMap id = AnalyticMap::identity();
    const AnalyticMap h = id + scale(0.2, id * id) + AnalyticMap::constant(1.5);
    const AnalyticMap g = scale(Complex(0.3, 0.1), id * id) + scale(0.05, id * id * id);
    const HarmonicMap fp(h, g);
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.85);
        const Jet3 w = fp.dilatation_jet(z);
        const auto omega_val = [&](Complex t) { return fp.dilatation_jet(t).d0; };
        const auto omega_d1 = [&](Complex t) { return fp.dilatation_jet(t).d1; };
        CHECK(std::abs(w.d1 - oracle::fd4(omega_val, z)) <=
              1e-6 * std::max(1.0, std::abs(w.d1)));
        CHECK(std::abs(w.d2 - oracle::fd4(omega_d1, z)) <=
              1e-6 * std::max(1.0, std::abs(w.d2)));
    }

    // critical point of h
    const HarmonicMap crit(id * id, g);  // h' = 2z vanishes at 0
    CHECK_THROWS_AS(crit.dilatation_jet(0.0), DivisionNearZero);
}

TEST_CASE("koebe transform") {
    std::mt19937_64 rng(25);
    const HarmonicMap f = verify::random_harmonic_map(rng);

    // zeta = 0 on a normalized map is the identity operation. The corpus map
    // is normalized up to h'(0), so normalize first via the transform itself.
    const HarmonicMap normalized = koebe_transform(f, 0.0);
    const HarmonicMap again = koebe_transform(normalized, 0.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(normalized.eval(z) - again.eval(z)) <= 1e-12);
    }

    // result is normalized for any center
    for (int i = 0; i < 10; ++i) {
        const Complex zeta = verify::random_disk_point(rng, 0.7);
        const HarmonicMap k = koebe_transform(f, zeta);
        CHECK(std::abs(k.analytic_part()(0.0).d0) <= 1e-12);
        CHECK(std::abs(k.coanalytic_part()(0.0).d0) <= 1e-12);
        CHECK(std::abs(k.analytic_part()(0.0).d1 - 1.0) <= 1e-12);
    }

    CHECK_THROWS_AS(koebe_transform(f, Complex(1.2, 0.0)), PointOutsideDisk);
}

TEST_CASE("affine transform") {
    std::mt19937_64 rng(26);
    const HarmonicMap f = verify::random_harmonic_map(rng);

    const HarmonicMap same = affine_transform(f, 0.0);
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(same.eval(z) - f.eval(z)) <= 1e-12);
    }

    // the unnormalized affine family: analytic part of f + conj(a f) is h + conj(a) g
    const Complex a(0.3, -0.2);
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        const Complex expected =
            f.analytic_part()(z).d0 + std::conj(a) * f.coanalytic_part()(z).d0;
        const HarmonicMap fa(
            f.analytic_part() + scale(std::conj(a), f.coanalytic_part()),
            f.coanalytic_part() + scale(a, f.analytic_part()));
        CHECK(std::abs(fa.analytic_part()(z).d0 - expected) <= 1e-13);
        // and the full map agrees with f + conj(a f) pointwise
        const Complex direct = f.eval(z) + std::conj(a * f.eval(z));
        CHECK(std::abs(fa.eval(z) - direct) <= 1e-12);
    }

    CHECK_THROWS_AS(affine_transform(f, Complex(1.0, 0.1)), PointOutsideDisk);
}

TEST_CASE("affine changes compose without disturbing the Schwarzian") {
    std::mt19937_64 rng(261);
    const HarmonicMap f = verify::random_harmonic_map(rng);
    const HarmonicMap twice =
        affine_transform(affine_transform(f, Complex(0.2, 0.1)), Complex(-0.15, 0.3));
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(schwarzian_harmonic(twice, z) - schwarzian_harmonic(f, z)) <=
              1e-10);
    }
}

TEST_CASE("affine transform normalizer can vanish") {
    // g'(0) = 2, eps = 1/2 makes 1 - conj(eps) g'(0) = 0
    const HarmonicMap f(AnalyticMap::identity(),
                        scale(2.0, AnalyticMap::identity()));
    CHECK_THROWS_AS(affine_transform(f, 0.5), DegenerateAffine);
}

TEST_CASE("precompose") {
    std::mt19937_64 rng(27);
    const HarmonicMap f = verify::random_harmonic_map(rng);
    const AnalyticMap id = AnalyticMap::identity();
    const HarmonicMap same = precompose(f, id);
    const AnalyticMap phi = verify::random_automorphism(rng);
    const HarmonicMap moved = precompose(f, phi);
    for (int i = 0; i < 50; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.9);
        CHECK(std::abs(same.eval(z) - f.eval(z)) <= 1e-14);
        CHECK(std::abs(moved.analytic_part()(z).d0 -
                       f.analytic_part()(phi(z).d0).d0) <= 1e-13);
        CHECK(std::abs(moved.coanalytic_part()(z).d0 -
                       f.coanalytic_part()(phi(z).d0).d0) <= 1e-13);
    }
}

TEST_CASE("sense preservation") {
    SamplingSpec small;
    small.n_radii = 16;
    small.n_angles = 32;
    small.refine_rounds = 0;

    const HarmonicMap id(AnalyticMap::identity(), AnalyticMap::constant(0.0));
    const SensePreservation ok = is_sense_preserving(id, small);
    CHECK(ok.sense_preserving);
    CHECK(ok.min_jacobian == doctest::Approx(1.0));

    // f = conj(z)
    const HarmonicMap conj_z(AnalyticMap::constant(0.0), AnalyticMap::identity());
    const SensePreservation bad = is_sense_preserving(conj_z, small);
    CHECK_FALSE(bad.sense_preserving);
    CHECK(bad.min_jacobian == doctest::Approx(-1.0));

    // the lens shear is sense-preserving for every alpha in (0, 1]
    for (double alpha : {0.25, 1.0}) {
        const HarmonicMap shear(AnalyticMap::identity(),
                                antiderivative(make_lens_map(alpha)));
        CHECK(is_sense_preserving(shear, small).sense_preserving);
    }

    // dilatation modulus stays below 1 on sampled sense-preserving maps
    std::mt19937_64 rng(28);
    const HarmonicMap f = verify::random_harmonic_map(rng);
    for (int i = 0; i < 200; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.95);
        CHECK(std::abs(f.dilatation_jet(z).d0) < 1.0);
    }
}

TEST_CASE("antiderivative integrates correctly") {
    // F' = 1/(1-z)^2 has F = z/(1-z) with F(0) = 0
    const AnalyticMap one = AnalyticMap::constant(1.0);
    const AnalyticMap id = AnalyticMap::identity();
    const AnalyticMap den = (one - id) * (one - id);
    const AnalyticMap F = antiderivative(one / den);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const Complex z = verify::random_disk_point(rng, 0.8);
        const Complex expected = z / (1.0 - z);
        CHECK(std::abs(F(z).d0 - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
    }
}
