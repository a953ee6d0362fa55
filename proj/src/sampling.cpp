#include "schwlab/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace schwlab {

void SamplingSpec::validate() const {
    if (n_radii < 4) throw std::invalid_argument("SamplingSpec: n_radii must be >= 4");
    if (n_angles < 4) throw std::invalid_argument("SamplingSpec: n_angles must be >= 4");
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw std::invalid_argument("SamplingSpec: r_max must lie in (0, 1)");
    }
    if (refine_rounds < 0) {
        throw std::invalid_argument("SamplingSpec: refine_rounds must be >= 0");
    }
    if (refine_factor < 1) {
        throw std::invalid_argument("SamplingSpec: refine_factor must be >= 1");
    }
}

std::vector<double> radial_schedule(const SamplingSpec& spec) {
    spec.validate();
    const double s_end = 1.0 - spec.r_max;
    std::vector<double> radii(spec.n_radii);
    // s_k = s_end^(k/(n-1)) rather than iterated multiplication: grids whose
    // n_radii - 1 divide each other then share radii bit-for-bit, which keeps
    // lower_bound exactly monotone under nested refinement.
    for (int k = 0; k < spec.n_radii; ++k) {
        radii[k] = 1.0 - std::pow(s_end, static_cast<double>(k) / (spec.n_radii - 1));
    }
    radii.back() = spec.r_max;
    return radii;
}

}  // namespace schwlab
