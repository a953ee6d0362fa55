#include "schwlab/harmonic_map.hpp"

#include <cmath>
#include <limits>

namespace schwlab {

Jet3 HarmonicMap::dilatation_jet(Complex z, double div_epsilon) const {
    const Jet3 hj = h_(z);
    const Jet3 gj = g_(z);
    const Jet3 num{gj.d1, gj.d2, gj.d3, 0.0};
    const Jet3 den{hj.d1, hj.d2, hj.d3, 0.0};
    Jet3 w = jet_div(num, den, div_epsilon);
    w.d3 = 0.0;  // would need fourth derivatives of h, g
    return w;
}

AnalyticMap HarmonicMap::dilatation_map() const {
    HarmonicMap self = *this;
    return AnalyticMap("dilatation(" + h_.descriptor() + "," + g_.descriptor() + ")",
                       [self](Complex z) { return self.dilatation_jet(z); });
}

HarmonicMap make_harmonic(AnalyticMap h, AnalyticMap g) {
    return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap koebe_transform(const HarmonicMap& f, Complex zeta) {
    if (std::abs(zeta) >= 1.0) {
        throw PointOutsideDisk("Koebe transform center must lie in the open disk");
    }
    const AnalyticMap sigma = make_disk_automorphism(zeta, 0.0);
    const Jet3 h_at = f.analytic_part()(zeta);
    const Jet3 g_at = f.coanalytic_part()(zeta);
    const Complex c = (1.0 - std::norm(zeta)) * h_at.d1;
    if (std::abs(c) <= kDivEpsilon) {
        throw DivisionNearZero("Koebe transform at a critical point of h");
    }
    AnalyticMap H = scale(1.0 / c, translate(compose(f.analytic_part(), sigma), -h_at.d0));
    AnalyticMap G = scale(1.0 / std::conj(c),
                          translate(compose(f.coanalytic_part(), sigma), -g_at.d0));
    return HarmonicMap(std::move(H), std::move(G));
}

HarmonicMap affine_transform(const HarmonicMap& f, Complex eps) {
    if (std::abs(eps) >= 1.0) {
        throw PointOutsideDisk("affine change parameter must lie in the open disk");
    }
    const Complex gp0 = f.coanalytic_part()(0.0).d1;
    const Complex den = 1.0 - std::conj(eps) * gp0;
    if (std::abs(den) <= kDivEpsilon) {
        throw DegenerateAffine("affine change normalizer vanishes");
    }
    // f - conj(eps f) = (h - conj(eps) g) + conj(g - eps h)
    AnalyticMap H = scale(1.0 / den,
                          f.analytic_part() - scale(std::conj(eps), f.coanalytic_part()));
    AnalyticMap G = scale(1.0 / std::conj(den),
                          f.coanalytic_part() - scale(eps, f.analytic_part()));
    return HarmonicMap(std::move(H), std::move(G));
}

HarmonicMap precompose(const HarmonicMap& f, const AnalyticMap& phi) {
    return HarmonicMap(compose(f.analytic_part(), phi),
                       compose(f.coanalytic_part(), phi));
}

SensePreservation is_sense_preserving(const HarmonicMap& f, const SamplingSpec& spec) {
    const std::vector<double> radii = radial_schedule(spec);
    double min_j = std::numeric_limits<double>::infinity();
    Complex worst = 0.0;
    for (double r : radii) {
        const int n_angles = (r == 0.0) ? 1 : spec.n_angles;
        for (int j = 0; j < n_angles; ++j) {
            const Complex z = std::polar(r, 2.0 * M_PI * j / spec.n_angles);
            const double jac = f.jacobian(z);
            if (jac < min_j) {
                min_j = jac;
                worst = z;
            }
        }
    }
    return SensePreservation{min_j > 0.0, worst, min_j};
}

}  // namespace schwlab
