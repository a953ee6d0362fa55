#include "schwlab/analytic_map.hpp"

#include <cmath>
#include <sstream>

#include "schwlab/quadrature.hpp"

namespace schwlab {
namespace {

std::string format_complex(Complex c) {
    std::ostringstream os;
    os << c.real();
    if (c.imag() != 0.0) {
        os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    }
    return os.str();
}

}  // namespace

AnalyticMap AnalyticMap::identity() {
    return AnalyticMap("z", [](Complex z) { return Jet3::variable(z); });
}

AnalyticMap AnalyticMap::constant(Complex c) {
    return AnalyticMap(format_complex(c), [c](Complex) { return Jet3::constant(c); });
}

AnalyticMap AnalyticMap::koebe() {
    // z / (1-z)^2
    return AnalyticMap("koebe()", [](Complex z) {
        const Jet3 num = Jet3::variable(z);
        const Complex u = 1.0 - z;
        const Jet3 den{u * u, -2.0 * u, 2.0, 0.0};
        return jet_div(num, den);
    });
}

AnalyticMap make_mobius(const MobiusParams& p) {
    if (std::abs(p.determinant()) == 0.0) {
        throw DegenerateMobius("mobius parameters with ad - bc = 0");
    }
    std::ostringstream os;
    os << "mobius(" << format_complex(p.a) << "," << format_complex(p.b) << ","
       << format_complex(p.c) << "," << format_complex(p.d) << ")";
    return AnalyticMap(os.str(), [p](Complex z) {
        const Jet3 num{p.a * z + p.b, p.a, 0.0, 0.0};
        const Jet3 den{p.c * z + p.d, p.c, 0.0, 0.0};
        return jet_div(num, den);
    });
}

AnalyticMap make_disk_automorphism(Complex zeta, double theta) {
    if (std::abs(zeta) >= 1.0) {
        throw PointOutsideDisk("automorphism center must lie in the open disk");
    }
    const Complex phase = std::polar(1.0, theta);
    std::ostringstream os;
    os << "automorphism(" << format_complex(zeta) << "," << theta << ")";
    return AnalyticMap(os.str(), [zeta, phase](Complex z) {
        const Jet3 num{phase * (z + zeta), phase, 0.0, 0.0};
        const Jet3 den{1.0 + std::conj(zeta) * z, std::conj(zeta), 0.0, 0.0};
        return jet_div(num, den);
    });
}

AnalyticMap make_lens_map(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw InvalidAlpha("lens exponent must lie in (0, 1], got " +
                           std::to_string(alpha));
    }
    std::ostringstream os;
    os << "lens(" << alpha << ")";
    return AnalyticMap(os.str(), [alpha](Complex z) {
        // l(z) = (1+z)/(1-z) maps into Re > 0; principal branch is safe.
        const Jet3 lnum{1.0 + z, 1.0, 0.0, 0.0};
        const Jet3 lden{1.0 - z, -1.0, 0.0, 0.0};
        const Jet3 p = jet_pow(jet_div(lnum, lden), alpha);
        const Jet3 one = Jet3::constant(1.0);
        return jet_div(jet_sub(p, one), jet_add(p, one));
    });
}

AnalyticMap operator+(const AnalyticMap& a, const AnalyticMap& b) {
    return AnalyticMap("(" + a.descriptor() + "+" + b.descriptor() + ")",
                       [a, b](Complex z) { return jet_add(a(z), b(z)); });
}

AnalyticMap operator-(const AnalyticMap& a, const AnalyticMap& b) {
    return AnalyticMap("(" + a.descriptor() + "-" + b.descriptor() + ")",
                       [a, b](Complex z) { return jet_sub(a(z), b(z)); });
}

AnalyticMap operator*(const AnalyticMap& a, const AnalyticMap& b) {
    return AnalyticMap("(" + a.descriptor() + "*" + b.descriptor() + ")",
                       [a, b](Complex z) { return jet_mul(a(z), b(z)); });
}

AnalyticMap operator/(const AnalyticMap& a, const AnalyticMap& b) {
    return AnalyticMap("(" + a.descriptor() + "/" + b.descriptor() + ")",
                       [a, b](Complex z) { return jet_div(a(z), b(z)); });
}

AnalyticMap operator-(const AnalyticMap& a) {
    return AnalyticMap("(-" + a.descriptor() + ")",
                       [a](Complex z) { return jet_neg(a(z)); });
}

AnalyticMap scale(Complex c, const AnalyticMap& m) {
    return AnalyticMap("scale(" + format_complex(c) + "," + m.descriptor() + ")",
                       [c, m](Complex z) { return jet_scale(c, m(z)); });
}

AnalyticMap translate(const AnalyticMap& m, Complex c) {
    return AnalyticMap("(" + m.descriptor() + "+" + format_complex(c) + ")",
                       [c, m](Complex z) {
                           Jet3 j = m(z);
                           j.d0 += c;
                           return j;
                       });
}

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner) {
    return AnalyticMap("compose(" + outer.descriptor() + "," + inner.descriptor() + ")",
                       [outer, inner](Complex z) {
                           const Jet3 in = inner(z);
                           // outer's own evaluation enforces |in.d0| < 1.
                           const Jet3 out = outer(in.d0);
                           return jet_compose(out, in);
                       });
}

AnalyticMap map_exp(const AnalyticMap& m) {
    return AnalyticMap("exp(" + m.descriptor() + ")",
                       [m](Complex z) { return jet_exp(m(z)); });
}

AnalyticMap map_log(const AnalyticMap& m) {
    return AnalyticMap("log(" + m.descriptor() + ")",
                       [m](Complex z) { return jet_log(m(z)); });
}

AnalyticMap map_pow(const AnalyticMap& m, double alpha) {
    std::ostringstream os;
    os << "pow(" << m.descriptor() << "," << alpha << ")";
    return AnalyticMap(os.str(), [m, alpha](Complex z) { return jet_pow(m(z), alpha); });
}

AnalyticMap antiderivative(const AnalyticMap& m) {
    return AnalyticMap("antiderivative(" + m.descriptor() + ")", [m](Complex z) {
        const Complex value =
            integrate_segment([&m](Complex w) { return m(w).d0; }, 0.0, z);
        const Jet3 d = m(z);
        return Jet3{value, d.d0, d.d1, d.d2};
    });
}

}  // namespace schwlab
