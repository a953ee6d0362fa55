#pragma once

#include "schwlab/analytic_map.hpp"
#include "schwlab/sampling.hpp"

namespace schwlab {

struct SensePreservation {
    bool sense_preserving;
    Complex worst_point;    // sampled point minimizing the Jacobian
    double min_jacobian;
};

// f = h + conj(g) with h, g analytic on the disk. The pair is stored as-is;
// sense preservation is a property of the pair and is checked lazily by
// is_sense_preserving, never at construction.
class HarmonicMap {
public:
    HarmonicMap(AnalyticMap h, AnalyticMap g) : h_(std::move(h)), g_(std::move(g)) {}

    const AnalyticMap& analytic_part() const noexcept { return h_; }
    const AnalyticMap& coanalytic_part() const noexcept { return g_; }

    Complex eval(Complex z) const {
        return h_(z).d0 + std::conj(g_(z).d0);
    }

    double jacobian(Complex z) const {
        const Complex hp = h_(z).d1;
        const Complex gp = g_(z).d1;
        return std::norm(hp) - std::norm(gp);
    }

    // Jet of the dilatation omega = g'/h'. Carries (omega, omega', omega'');
    // the third-derivative slot would need fourth derivatives of h and g and
    // is set to zero.
    Jet3 dilatation_jet(Complex z, double div_epsilon = kDivEpsilon) const;

    // The dilatation as an order-2 analytic map (see dilatation_jet).
    AnalyticMap dilatation_map() const;

private:
    AnalyticMap h_, g_;
};

HarmonicMap make_harmonic(AnalyticMap h, AnalyticMap g);

// Koebe transform K_zeta: precompose with the automorphism moving 0 to zeta,
// subtract the value at zeta, divide by (1-|zeta|^2) h'(zeta). The result is
// normalized: H(0) = G(0) = 0, H'(0) = 1.
HarmonicMap koebe_transform(const HarmonicMap& f, Complex zeta);

// Affine change A_eps: (f - conj(eps f)) / (1 - conj(eps) g'(0)). The
// analytic part becomes (h - conj(eps) g) / D and the co-analytic part
// (g - eps h) / conj(D), which keeps the result in the form H + conj(G).
HarmonicMap affine_transform(const HarmonicMap& f, Complex eps);

// f composed with an analytic phi mapping the disk into itself.
HarmonicMap precompose(const HarmonicMap& f, const AnalyticMap& phi);

// J_f = |h'|^2 - |g'|^2 > 0 at every sampled point; reports the point
// minimizing J_f as witness either way.
SensePreservation is_sense_preserving(const HarmonicMap& f, const SamplingSpec& spec);

}  // namespace schwlab
