#pragma once

#include <functional>

#include "schwlab/errors.hpp"

namespace schwlab {

// Integral of f along the straight segment from z0 to z1, adaptive
// Gauss-Legendre (15 nodes per panel, bisection until the panel estimate
// stabilizes). Deterministic.
Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex z0,
                          Complex z1, double rel_tol = 1e-12);

}  // namespace schwlab
