#pragma once

#include <functional>

#include "schwlab/harmonic_map.hpp"
#include "schwlab/sampling.hpp"

namespace schwlab {

// Result of a sup estimation over the open disk. lower_bound is the exact
// maximum over every point actually evaluated; estimate adds a radial tail
// extrapolation and is not an upper bound of anything. Consumers that treat
// the estimate as the norm opt into that explicitly (see criteria).
struct NormReport {
    double lower_bound = 0.0;
    double estimate = 0.0;
    Complex argmax{};
    bool converged = false;
    long long samples_used = 0;
    bool boundary_degenerate = false;  // set by estimate_sup_modulus only

    bool operator==(const NormReport&) const = default;
};

using PointFunctional = std::function<double(Complex)>;

// Shared driver: polar grid with radii clustered toward the boundary,
// per-ring maxima, iterated-Aitken tail extrapolation, then refine_rounds of
// local refinement around the argmax. Deterministic regardless of how the
// grid is partitioned across threads.
NormReport estimate_sup(const PointFunctional& functional, const SamplingSpec& spec,
                        double rel_tol = 1e-4);

// sup |S_f(z)| (1-|z|^2)^2.
NormReport estimate_schwarzian_norm(const HarmonicMap& f, const SamplingSpec& spec,
                                    double rel_tol = 1e-4);

// sup |w'(z)| (1-|z|^2) / (1-|w(z)|^2); at most 1 by Schwarz-Pick.
NormReport estimate_omega_star_norm(const AnalyticMap& omega, const SamplingSpec& spec,
                                    double rel_tol = 1e-4);

// sup |w''(z)| (1-|z|^2)^2 / (1-|w(z)|^2).
NormReport estimate_omega_second_functional(const AnalyticMap& omega,
                                            const SamplingSpec& spec,
                                            double rel_tol = 1e-4);

// sup |w(z)| over the grid; boundary_degenerate is set when the extrapolated
// estimate reaches 1 - boundary_tol.
NormReport estimate_sup_modulus(const AnalyticMap& omega, const SamplingSpec& spec,
                                double rel_tol = 1e-4, double boundary_tol = 1e-2);

// Worker count for grid evaluation: min(hardware, SCHWLAB_THREADS).
// SCHWLAB_THREADS unset, empty or 0 means auto.
int effective_thread_count();

}  // namespace schwlab
