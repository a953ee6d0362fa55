#pragma once

#include "schwlab/harmonic_map.hpp"

namespace schwlab {

// 1 - |omega|^2 at or below this is treated as loss of sense preservation.
inline constexpr double kBoundaryEpsilon = 1e-12;

struct SchwarzianSample {
    Complex z;
    Complex value;
    double weighted;  // |value| (1 - |z|^2)^2
};

// S = f'''/f' - (3/2)(f''/f')^2 from a jet. Jets deliver f''' directly, so
// the expanded form is used; its algebraic equality with (f''/f')' -
// (1/2)(f''/f')^2 is covered by tests rather than assumed.
Complex schwarzian_from_jet(const Jet3& jet, double div_epsilon = kDivEpsilon);

Complex schwarzian_analytic(const AnalyticMap& phi, Complex z);

// f''/f'.
Complex pre_schwarzian(const AnalyticMap& phi, Complex z);

// Schwarzian of a sense-preserving harmonic map:
//   S(h) + conj(w)/(1-|w|^2) * ((h''/h') w' - w'') - (3/2) (conj(w) w' / (1-|w|^2))^2
// with w = g'/h'. Degenerates as |w| -> 1; that is an error, not a value.
Complex schwarzian_harmonic(const HarmonicMap& f, Complex z,
                            double boundary_epsilon = kBoundaryEpsilon);

double weighted_magnitude(Complex s, Complex z);

SchwarzianSample sample_harmonic(const HarmonicMap& f, Complex z);

}  // namespace schwlab
