#pragma once

#include <functional>

#include "schwlab/errors.hpp"

namespace schwlab {

// Fourth-order central difference along the real direction, valid for
// holomorphic component functions:
//   f'(z) ~ (-f(z+2h) + 8 f(z+h) - 8 f(z-h) + f(z-2h)) / (12 h)
inline Complex central_difference(const std::function<Complex(Complex)>& f, Complex z,
                                  double h = 1e-4) {
    return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) /
           (12.0 * h);
}

}  // namespace schwlab
