#include "schwlab/quadrature.hpp"

#include <array>
#include <cmath>

namespace schwlab {
namespace {

struct GaussLegendre15 {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};

    GaussLegendre15() {
        // Roots of P_15 by Newton iteration from the Chebyshev-like guess.
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre15& rule() {
    static const GaussLegendre15 r;
    return r;
}

Complex panel(const std::function<Complex(Complex)>& f, Complex z0, Complex dz,
              double t0, double t1) {
    const auto& r = rule();
    const double mid = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    Complex acc = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double t = mid + half * r.node[i];
        acc += r.weight[i] * f(z0 + t * dz);
    }
    return acc * half * dz;
}

Complex adaptive(const std::function<Complex(Complex)>& f, Complex z0, Complex dz,
                 double t0, double t1, Complex whole, double tol, int depth) {
    const double mid = 0.5 * (t0 + t1);
    const Complex left = panel(f, z0, dz, t0, mid);
    const Complex right = panel(f, z0, dz, mid, t1);
    const Complex split = left + right;
    if (depth >= 12 || std::abs(split - whole) <= tol * (1.0 + std::abs(split))) {
        return split;
    }
    return adaptive(f, z0, dz, t0, mid, left, tol, depth + 1) +
           adaptive(f, z0, dz, mid, t1, right, tol, depth + 1);
}

}  // namespace

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex z0,
                          Complex z1, double rel_tol) {
    const Complex dz = z1 - z0;
    if (std::abs(dz) == 0.0) return 0.0;
    const Complex whole = panel(f, z0, dz, 0.0, 1.0);
    return adaptive(f, z0, dz, 0.0, 1.0, whole, rel_tol, 0);
}

}  // namespace schwlab
