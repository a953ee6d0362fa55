#pragma once

#include <string>

#include "schwlab/harmonic_map.hpp"

namespace schwlab {

// Parsed map specification. Statements are separated by ';':
//   h = <expr>            analytic part (required)
//   g = <expr>            co-analytic part, or
//   g' = <expr>           its derivative (g is recovered by integration), or
//   omega = <expr>        the dilatation (g' = omega * h')
// followed by optional transform directives, applied in order:
//   koebe_transform(zeta)  affine(eps)  precompose_automorphism(zeta, theta)
// Expressions: complex literals ("1.5", "2i", "0.3+0.1i"), z, + - * /,
// parentheses, and mobius(a,b,c,d), lens(alpha), koebe(), exp(e), log(e),
// pow(e, alpha), compose(outer, inner), scale(c, e).
struct MapSpec {
    std::string source;
    HarmonicMap map;
    AnalyticMap omega;        // dilatation of `map`
    bool g_from_derivative;   // g was supplied as g' or omega
};

MapSpec parse_map_spec(const std::string& text);

// One complex constant in the same literal syntax ("a+bi", whitespace ok).
Complex parse_complex(const std::string& text);

}  // namespace schwlab
