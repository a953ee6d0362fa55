#include "doctest.h"
#include "schwlab/expression.hpp"
#include "schwlab/schwarzian.hpp"

using namespace schwlab;

TEST_CASE("basic specs") {
    const MapSpec plain = parse_map_spec("h=z; g=0");
    CHECK(std::abs(schwarzian_harmonic(plain.map, 0.5)) <= 1e-14);
    CHECK(plain.map.eval(Complex(0.3, 0.1)) == Complex(0.3, 0.1));
    CHECK_FALSE(plain.g_from_derivative);

    const MapSpec koebe = parse_map_spec("h=koebe(); g=0");
    const Complex s = schwarzian_harmonic(koebe.map, 0.0);
    CHECK(std::abs(s - Complex(-6.0)) <= 1e-13);
    CHECK(weighted_magnitude(s, 0.0) == doctest::Approx(6.0));
}

TEST_CASE("g may be supplied as its derivative or as the dilatation") {
    const MapSpec by_gprime = parse_map_spec("h=z; g'=lens(0.25)");
    CHECK(by_gprime.g_from_derivative);
    CHECK(std::abs(by_gprime.map.coanalytic_part()(0.0).d0) <= 1e-14);  // g(0) = 0

    const MapSpec by_omega = parse_map_spec("h=z; omega=lens(0.25)");
    const AnalyticMap lens = make_lens_map(0.25);
    for (Complex z : {Complex(0.4, 0.1), Complex(-0.3, 0.5), Complex(0.0, -0.7)}) {
        const Jet3 want = lens(z);
        for (const MapSpec* spec : {&by_gprime, &by_omega}) {
            const Jet3 got = spec->omega(z);
            CHECK(std::abs(got.d0 - want.d0) <= 1e-12);
            CHECK(std::abs(got.d1 - want.d1) <= 1e-12);
            CHECK(std::abs(got.d2 - want.d2) <= 1e-11);
        }
    }
}

TEST_CASE("literals and arithmetic") {
    CHECK(parse_complex("0.3+0.1i") == Complex(0.3, 0.1));
    CHECK(parse_complex("2i") == Complex(0.0, 2.0));
    CHECK(parse_complex("-1.5e-2") == Complex(-0.015, 0.0));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex(" 1 - 2i ") == Complex(1.0, -2.0));
    CHECK(parse_complex("(2+i)*(2-i)") == Complex(5.0, 0.0));

    const MapSpec arith = parse_map_spec("h = (z + 0.5*z*z) / (1 - 0.1*z); g = 0");
    const Complex z(0.2, -0.3);
    const Complex expected = (z + 0.5 * z * z) / (1.0 - 0.1 * z);
    CHECK(std::abs(arith.map.analytic_part()(z).d0 - expected) <= 1e-14);
}

TEST_CASE("functions in expressions") {
    const MapSpec m = parse_map_spec(
        "h = compose(koebe(), mobius(1,0,0,2)); g = scale(0.1, exp(z))");
    const Complex z(0.3, 0.2);
    const Complex inner = z / 2.0;
    const Complex expected_h = inner / ((1.0 - inner) * (1.0 - inner));
    CHECK(std::abs(m.map.analytic_part()(z).d0 - expected_h) <= 1e-13);
    CHECK(std::abs(m.map.coanalytic_part()(z).d0 - 0.1 * std::exp(z)) <= 1e-14);

    const MapSpec p = parse_map_spec("h = pow(mobius(1,1,-1,1), 0.5); g = 0");
    CHECK(std::abs(p.map.analytic_part()(0.0).d0 - 1.0) <= 1e-14);

    const MapSpec lg = parse_map_spec("h = log(mobius(1,1,-1,1)); g = 0");
    CHECK(std::abs(lg.map.analytic_part()(0.0).d0) <= 1e-14);
}

TEST_CASE("transform directives") {
    const MapSpec k = parse_map_spec("h=koebe(); g=0; koebe_transform(0.3)");
    CHECK(std::abs(k.map.analytic_part()(0.0).d0) <= 1e-12);
    CHECK(std::abs(k.map.analytic_part()(0.0).d1 - 1.0) <= 1e-12);

    const MapSpec a = parse_map_spec("h=z; g'=lens(0.5); affine(0.1+0.2i)");
    // affine change preserves the Schwarzian
    const MapSpec base = parse_map_spec("h=z; g'=lens(0.5)");
    for (Complex z : {Complex(0.4, 0.1), Complex(-0.2, -0.5)}) {
        CHECK(std::abs(schwarzian_harmonic(a.map, z) -
                       schwarzian_harmonic(base.map, z)) <= 1e-10);
    }

    const MapSpec pre = parse_map_spec("h=koebe(); g=0; precompose_automorphism(0.2, 1.0)");
    const AnalyticMap sigma = make_disk_automorphism(0.2, 1.0);
    const Complex z(0.1, 0.3);
    CHECK(std::abs(pre.map.analytic_part()(z).d0 -
                   AnalyticMap::koebe()(sigma(z).d0).d0) <= 1e-13);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_map_spec(""), ParseError);
    CHECK_THROWS_AS(parse_map_spec("g=z"), ParseError);            // h missing
    CHECK_THROWS_AS(parse_map_spec("h="), ParseError);
    CHECK_THROWS_AS(parse_map_spec("q=z"), ParseError);            // unknown target
    CHECK_THROWS_AS(parse_map_spec("h=z; h=z"), ParseError);       // double assign
    CHECK_THROWS_AS(parse_map_spec("h=z; g=0; g'=z"), ParseError); // conflicting g
    CHECK_THROWS_AS(parse_map_spec("h=frob(1)"), ParseError);      // unknown function
    CHECK_THROWS_AS(parse_map_spec("h=lens(z)"), ParseError);      // z in constant slot
    CHECK_THROWS_AS(parse_map_spec("h=lens(0.5i)"), ParseError);   // non-real constant
    CHECK_THROWS_AS(parse_map_spec("h=z @"), ParseError);
    CHECK_THROWS_AS(parse_map_spec("h=z; bogus(1)"), ParseError);  // unknown directive
    CHECK_THROWS_AS(parse_complex("z"), ParseError);
    CHECK_THROWS_AS(parse_complex("1 2"), ParseError);

    try {
        parse_map_spec("h = z + ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }

    // construction-time domain errors surface as their own types
    CHECK_THROWS_AS(parse_map_spec("h=mobius(1,1,1,1)"), DegenerateMobius);
    CHECK_THROWS_AS(parse_map_spec("h=lens(2.0)"), InvalidAlpha);
}
