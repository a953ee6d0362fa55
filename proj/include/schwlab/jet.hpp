#pragma once

#include <cmath>

#include "schwlab/errors.hpp"

namespace schwlab {

// Denominators with |value| at or below this are treated as critical points.
inline constexpr double kDivEpsilon = 1e-300;

// Value of a complex function together with its first three derivatives at a
// point. Components are derivatives, not Taylor coefficients: d2 = f''(z).
// Order is fixed at 3 because the harmonic Schwarzian consumes exactly
// h''', g''' and nothing higher.
struct Jet3 {
    Complex d0{};
    Complex d1{};
    Complex d2{};
    Complex d3{};

    static Jet3 variable(Complex z) { return {z, 1.0, 0.0, 0.0}; }
    static Jet3 constant(Complex c) { return {c, 0.0, 0.0, 0.0}; }

    bool is_finite() const {
        return std::isfinite(d0.real()) && std::isfinite(d0.imag()) &&
               std::isfinite(d1.real()) && std::isfinite(d1.imag()) &&
               std::isfinite(d2.real()) && std::isfinite(d2.imag()) &&
               std::isfinite(d3.real()) && std::isfinite(d3.imag());
    }
};

inline Jet3 jet_add(const Jet3& a, const Jet3& b) {
    return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

inline Jet3 jet_sub(const Jet3& a, const Jet3& b) {
    return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

inline Jet3 jet_neg(const Jet3& a) { return {-a.d0, -a.d1, -a.d2, -a.d3}; }

inline Jet3 jet_scale(Complex c, const Jet3& a) {
    return {c * a.d0, c * a.d1, c * a.d2, c * a.d3};
}

// Leibniz rule through order 3.
inline Jet3 jet_mul(const Jet3& a, const Jet3& b) {
    return {a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3};
}

// Quotient jet, solved from a = q * b order by order. A near-zero leading
// denominator means evaluation at a critical point and is an error, never
// an Inf to propagate.
inline Jet3 jet_div(const Jet3& a, const Jet3& b, double div_epsilon = kDivEpsilon) {
    if (std::abs(b.d0) <= div_epsilon) {
        throw DivisionNearZero("jet division by value of modulus " +
                               std::to_string(std::abs(b.d0)));
    }
    Jet3 q;
    q.d0 = a.d0 / b.d0;
    q.d1 = (a.d1 - q.d0 * b.d1) / b.d0;
    q.d2 = (a.d2 - q.d0 * b.d2 - 2.0 * q.d1 * b.d1) / b.d0;
    q.d3 = (a.d3 - q.d0 * b.d3 - 3.0 * q.d1 * b.d2 - 3.0 * q.d2 * b.d1) / b.d0;
    return q;
}

// Faa di Bruno through order 3. The caller guarantees that `outer` was
// evaluated at the point inner.d0.
inline Jet3 jet_compose(const Jet3& outer, const Jet3& inner) {
    Jet3 r;
    r.d0 = outer.d0;
    r.d1 = outer.d1 * inner.d1;
    r.d2 = outer.d2 * inner.d1 * inner.d1 + outer.d1 * inner.d2;
    r.d3 = outer.d3 * inner.d1 * inner.d1 * inner.d1 +
           3.0 * outer.d2 * inner.d1 * inner.d2 + outer.d1 * inner.d3;
    return r;
}

inline Jet3 jet_exp(const Jet3& a) {
    const Complex e = std::exp(a.d0);
    return {e,
            e * a.d1,
            e * (a.d1 * a.d1 + a.d2),
            e * (a.d1 * a.d1 * a.d1 + 3.0 * a.d1 * a.d2 + a.d3)};
}

// Principal branch. The closed negative real axis (including 0) is the cut.
inline Jet3 jet_log(const Jet3& a) {
    if (a.d0.imag() == 0.0 && a.d0.real() <= 0.0) {
        throw BranchCutViolation("log of value on the closed negative real axis");
    }
    const Complex u = a.d1 / a.d0;
    const Complex v = a.d2 / a.d0;
    const Complex w = a.d3 / a.d0;
    return {std::log(a.d0), u, v - u * u, w - 3.0 * u * v + 2.0 * u * u * u};
}

inline Jet3 jet_pow(const Jet3& a, double alpha) {
    return jet_exp(jet_scale(alpha, jet_log(a)));
}

inline Jet3 operator+(const Jet3& a, const Jet3& b) { return jet_add(a, b); }
inline Jet3 operator-(const Jet3& a, const Jet3& b) { return jet_sub(a, b); }
inline Jet3 operator-(const Jet3& a) { return jet_neg(a); }
inline Jet3 operator*(const Jet3& a, const Jet3& b) { return jet_mul(a, b); }
inline Jet3 operator/(const Jet3& a, const Jet3& b) { return jet_div(a, b); }

}  // namespace schwlab
