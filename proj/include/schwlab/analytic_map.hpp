#pragma once

#include <functional>
#include <memory>
#include <string>

#include "schwlab/jet.hpp"

namespace schwlab {

// Evaluator for a holomorphic function on the open unit disk: maps a point
// z, |z| < 1, to the order-3 jet of the function at z. Immutable and safe to
// share across threads. Evaluation outside the open disk is an error.
class AnalyticMap {
public:
    using Evaluator = std::function<Jet3(Complex)>;

    AnalyticMap(std::string descriptor, Evaluator eval)
        : descriptor_(std::move(descriptor)),
          eval_(std::make_shared<Evaluator>(std::move(eval))) {}

    Jet3 operator()(Complex z) const {
        if (std::abs(z) >= 1.0) {
            throw PointOutsideDisk("evaluation point outside the open unit disk: |z| = " +
                                   std::to_string(std::abs(z)));
        }
        Jet3 jet = (*eval_)(z);
        if (!jet.is_finite()) {
            throw NonFiniteJet("non-finite jet from " + descriptor_);
        }
        return jet;
    }

    const std::string& descriptor() const noexcept { return descriptor_; }

    static AnalyticMap identity();
    static AnalyticMap constant(Complex c);
    static AnalyticMap koebe();

private:
    std::string descriptor_;
    std::shared_ptr<const Evaluator> eval_;
};

struct MobiusParams {
    Complex a, b, c, d;

    Complex determinant() const { return a * d - b * c; }
};

// (az + b) / (cz + d), ad - bc != 0. Poles inside the disk surface as
// DivisionNearZero at evaluation time.
AnalyticMap make_mobius(const MobiusParams& p);

// e^{i theta} (z + zeta) / (1 + conj(zeta) z), |zeta| < 1.
AnalyticMap make_disk_automorphism(Complex zeta, double theta);

// Lens map (l(z)^alpha - 1) / (l(z)^alpha + 1) with l(z) = (1+z)/(1-z),
// 0 < alpha <= 1. l maps the disk into the right half-plane, so the
// principal branch of the power is valid throughout.
AnalyticMap make_lens_map(double alpha);

AnalyticMap operator+(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator-(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator*(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator/(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator-(const AnalyticMap& a);

AnalyticMap scale(Complex c, const AnalyticMap& m);
AnalyticMap translate(const AnalyticMap& m, Complex c);

// outer(inner(z)); the inner value must stay inside the open disk.
AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

AnalyticMap map_exp(const AnalyticMap& m);
AnalyticMap map_log(const AnalyticMap& m);
AnalyticMap map_pow(const AnalyticMap& m, double alpha);

// F with F(0) = 0 and F' = m. The value slot comes from adaptive
// Gauss-Legendre integration along the straight segment [0, z]; the
// derivative slots are the jets of m shifted up one order and are exact.
AnalyticMap antiderivative(const AnalyticMap& m);

}  // namespace schwlab
