#pragma once

#include <vector>

#include "schwlab/errors.hpp"

namespace schwlab {

// Polar grid parameters for sup estimation and sense-preservation checks.
struct SamplingSpec {
    int n_radii = 64;
    int n_angles = 256;
    double r_max = 1.0 - 1e-3;
    int refine_rounds = 3;
    int refine_factor = 8;

    void validate() const;

    bool operator==(const SamplingSpec&) const = default;
};

// Radii r_k = 1 - s_k with s_k geometric from 1 down to 1 - r_max, so the
// first ring is the origin and rings cluster toward the boundary, where the
// (1-|z|^2)^2 weight makes the behavior delicate.
std::vector<double> radial_schedule(const SamplingSpec& spec);

}  // namespace schwlab
