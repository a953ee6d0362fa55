#include "schwlab/schwarzian.hpp"

namespace schwlab {

Complex schwarzian_from_jet(const Jet3& jet, double div_epsilon) {
    if (std::abs(jet.d1) <= div_epsilon) {
        throw DivisionNearZero("Schwarzian at a critical point (f' = 0)");
    }
    const Complex q = jet.d2 / jet.d1;
    return jet.d3 / jet.d1 - 1.5 * q * q;
}

Complex schwarzian_analytic(const AnalyticMap& phi, Complex z) {
    try {
        return schwarzian_from_jet(phi(z));
    } catch (EvaluationError& e) {
        e.attach_point(z);
        throw;
    }
}

Complex pre_schwarzian(const AnalyticMap& phi, Complex z) {
    try {
        const Jet3 jet = phi(z);
        if (std::abs(jet.d1) <= kDivEpsilon) {
            throw DivisionNearZero("pre-Schwarzian at a critical point (f' = 0)");
        }
        return jet.d2 / jet.d1;
    } catch (EvaluationError& e) {
        e.attach_point(z);
        throw;
    }
}

Complex schwarzian_harmonic(const HarmonicMap& f, Complex z, double boundary_epsilon) {
    try {
        const Jet3 hj = f.analytic_part()(z);
        const Complex sh = schwarzian_from_jet(hj);
        const Jet3 w = f.dilatation_jet(z);
        const double den = 1.0 - std::norm(w.d0);
        if (den <= boundary_epsilon) {
            throw DilatationOnBoundary("dilatation modulus reaches 1: 1 - |w|^2 = " +
                                       std::to_string(den));
        }
        const Complex wc = std::conj(w.d0);
        const Complex pre_h = hj.d2 / hj.d1;
        const Complex mid = wc / den * (pre_h * w.d1 - w.d2);
        const Complex tail = wc * w.d1 / den;
        return sh + mid - 1.5 * tail * tail;
    } catch (EvaluationError& e) {
        e.attach_point(z);
        throw;
    }
}

double weighted_magnitude(Complex s, Complex z) {
    const double w = 1.0 - std::norm(z);
    return std::abs(s) * w * w;
}

SchwarzianSample sample_harmonic(const HarmonicMap& f, Complex z) {
    const Complex s = schwarzian_harmonic(f, z);
    return SchwarzianSample{z, s, weighted_magnitude(s, z)};
}

}  // namespace schwlab
