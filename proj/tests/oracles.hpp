#pragma once

// Test-only oracles, kept independent of the jet kernels they check.

#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

// Fourth-order central difference along the real direction.
inline Complex fd4(const std::function<Complex(Complex)>& f, Complex z,
                   double h = 1e-4) {
    return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) /
           (12.0 * h);
}

// Closed-form Schwarzian of the Koebe function: S(k)(z) = -6 / (1 - z^2)^2,
// derived by hand from k'' / k' = (4 + 2z) / (1 - z^2).
inline Complex koebe_schwarzian(Complex z) {
    const Complex u = 1.0 - z * z;
    return -6.0 / (u * u);
}

// Lens map with exponent 1/2 through std::sqrt, bypassing exp/log jets.
inline Complex lens_half(Complex z) {
    const Complex p = std::sqrt((1.0 + z) / (1.0 - z));
    return (p - 1.0) / (p + 1.0);
}

// Mobius transform value, plain arithmetic.
inline Complex mobius(Complex a, Complex b, Complex c, Complex d, Complex z) {
    return (a * z + b) / (c * z + d);
}

}  // namespace oracle
