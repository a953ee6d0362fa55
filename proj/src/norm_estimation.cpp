#include "schwlab/norm_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "schwlab/schwarzian.hpp"

namespace schwlab {
namespace {

// Iterated Aitken extrapolation of a ring-maxima tail. Each sweep removes
// the dominant geometric component; the radial schedule is geometric in
// 1 - r, so boundary expansions in powers of (1-r)^p are sums of geometric
// sequences and settle after a few sweeps. Stalls (tiny second differences)
// fall back to the latest raw value.
double aitken_tail(std::vector<double> seq, int sweeps) {
    for (int s = 0; s < sweeps; ++s) {
        if (seq.size() < 3) break;
        std::vector<double> next;
        next.reserve(seq.size() - 2);
        for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
            const double d1 = seq[i + 1] - seq[i];
            const double d2 = seq[i + 2] - 2.0 * seq[i + 1] + seq[i];
            const double scale = std::max(1.0, std::abs(seq[i + 2]));
            if (std::abs(d2) < 1e-13 * scale) {
                next.push_back(seq[i + 2]);
            } else {
                const double v = seq[i] - d1 * d1 / d2;
                next.push_back(std::isfinite(v) ? v : seq[i + 2]);
            }
        }
        seq = std::move(next);
    }
    return seq.back();
}

struct Best {
    double value = -1.0;
    long long index = -1;  // lexicographic (radius, angle) as flat index
    Complex point{};

    void offer(double v, long long idx, Complex z) {
        if (index < 0 || v > value || (v == value && idx < index)) {
            value = v;
            index = idx;
            point = z;
        }
    }
};

struct FirstError {
    long long index = -1;
    std::exception_ptr error;

    void offer(long long idx, std::exception_ptr e) {
        if (!error || idx < index) {
            index = idx;
            error = e;
        }
    }
};

}  // namespace

int effective_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    long cap = 0;
    if (const char* env = std::getenv("SCHWLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) cap = v;
    }
    if (cap > 0 && cap < static_cast<long>(hw)) return static_cast<int>(cap);
    return static_cast<int>(hw);
}

NormReport estimate_sup(const PointFunctional& functional, const SamplingSpec& spec,
                        double rel_tol) {
    spec.validate();
    const std::vector<double> radii = radial_schedule(spec);
    const int n_r = spec.n_radii;
    const int n_a = spec.n_angles;

    std::vector<double> ring_max(n_r, -1.0);
    std::vector<double> values(static_cast<std::size_t>(n_r) * n_a, -1.0);
    std::vector<Best> bests;
    std::vector<FirstError> errors;
    long long samples = 0;

    const int workers = std::min(effective_thread_count(), n_r);
    bests.resize(workers);
    errors.resize(workers);

    auto run_rows = [&](int worker, int k_begin, int k_end) {
        for (int k = k_begin; k < k_end; ++k) {
            const double r = radii[k];
            const int angles = (r == 0.0) ? 1 : n_a;
            double row_best = -1.0;
            for (int j = 0; j < angles; ++j) {
                const Complex z = std::polar(r, 2.0 * M_PI * j / n_a);
                const long long idx = static_cast<long long>(k) * n_a + j;
                try {
                    const double v = functional(z);
                    if (v > row_best) row_best = v;
                    values[static_cast<std::size_t>(idx)] = v;
                    bests[worker].offer(v, idx, z);
                } catch (EvaluationError& e) {
                    e.attach_point(z);
                    errors[worker].offer(idx, std::current_exception());
                    return;
                } catch (...) {
                    errors[worker].offer(idx, std::current_exception());
                    return;
                }
            }
            ring_max[k] = row_best;
        }
    };

    if (workers <= 1) {
        run_rows(0, 0, n_r);
        samples = 0;
        for (int k = 0; k < n_r; ++k) samples += (radii[k] == 0.0) ? 1 : n_a;
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n_r + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int b = w * chunk;
            const int e = std::min(n_r, b + chunk);
            if (b >= e) break;
            pool.emplace_back(run_rows, w, b, e);
        }
        for (auto& t : pool) t.join();
        for (int k = 0; k < n_r; ++k) samples += (radii[k] == 0.0) ? 1 : n_a;
    }

    FirstError first;
    for (const auto& e : errors) {
        if (e.error) first.offer(e.index, e.error);
    }
    if (first.error) std::rethrow_exception(first.error);

    Best best;
    for (const auto& b : bests) {
        if (b.index >= 0) best.offer(b.value, b.index, b.point);
    }

    // Tail extrapolation over the boundary-most rings.
    const int tail_len = std::min<int>(n_r, 12);
    std::vector<double> tail(ring_max.end() - tail_len, ring_max.end());
    double extrapolated = aitken_tail(std::move(tail), 3);
    if (!std::isfinite(extrapolated)) extrapolated = best.value;

    // Local refinement in (log(1-r), angle) coordinates. Near-tied peaks are
    // common (the sup of a smooth functional often has several basins within
    // a fraction of a percent), so several well-separated starting cells are
    // refined independently and the best sample wins. Windows start 1.5 grid
    // cells wide and shrink to twice the previous round's spacing, so a peak
    // one spacing off the measured best stays inside the next window.
    const double s_end = 1.0 - spec.r_max;
    const double u_min = std::log(s_end);
    const double shrink = std::min(1.0, 2.0 / spec.refine_factor);

    struct Candidate {
        double value;
        long long index;
        Complex point;
        double u_center, t_center, u_width, t_width;
    };
    std::vector<Candidate> candidates;
    const auto add_candidate = [&](double v, long long idx, Complex z) {
        candidates.push_back(Candidate{v, idx, z,
                                       std::log(std::max(1.0 - std::abs(z), s_end)),
                                       std::arg(z),
                                       1.5 * std::abs(std::log(s_end)) / (n_r - 1),
                                       1.5 * 2.0 * M_PI / n_a});
    };
    if (spec.refine_rounds > 0) {
        // Non-maximum suppression over the raw grid: take the highest values
        // whose cells are at least 3 apart. A basin hiding between coarse
        // rings shows up as a high slope sample even when it is not a grid
        // local maximum.
        std::vector<long long> order;
        order.reserve(values.size());
        for (long long i = 0; i < static_cast<long long>(values.size()); ++i) {
            if (values[static_cast<std::size_t>(i)] >= 0.0) order.push_back(i);
        }
        std::sort(order.begin(), order.end(), [&](long long a, long long b) {
            const double va = values[static_cast<std::size_t>(a)];
            const double vb = values[static_cast<std::size_t>(b)];
            return va > vb || (va == vb && a < b);
        });
        constexpr std::size_t kMaxCandidates = 5;
        constexpr int kSuppressCells = 2;
        for (long long idx : order) {
            if (candidates.size() >= kMaxCandidates) break;
            const int k = static_cast<int>(idx / n_a);
            const int j = static_cast<int>(idx % n_a);
            bool suppressed = false;
            for (const Candidate& c : candidates) {
                const int ck = static_cast<int>(c.index / n_a);
                const int cj = static_cast<int>(c.index % n_a);
                const int dj = std::abs(j - cj);
                if (std::abs(k - ck) <= kSuppressCells &&
                    std::min(dj, n_a - dj) <= kSuppressCells) {
                    suppressed = true;
                    break;
                }
            }
            if (!suppressed) {
                add_candidate(values[static_cast<std::size_t>(idx)], idx,
                              std::polar(radii[k], 2.0 * M_PI * j / n_a));
            }
        }
    } else {
        add_candidate(best.value, best.index, best.point);
    }

    double prev_round = best.value;
    double last_change = std::numeric_limits<double>::infinity();
    const int side = 2 * spec.refine_factor + 1;
    for (int round = 0; round < spec.refine_rounds; ++round) {
        for (Candidate& c : candidates) {
            Complex round_point = c.point;
            double round_value = c.value;
            for (int iu = 0; iu < side; ++iu) {
                const double u = std::clamp(
                    c.u_center + c.u_width * (iu - spec.refine_factor) / spec.refine_factor,
                    u_min, 0.0);
                const double r = 1.0 - std::exp(u);
                for (int it = 0; it < side; ++it) {
                    const double th = c.t_center +
                                      c.t_width * (it - spec.refine_factor) /
                                          spec.refine_factor;
                    const Complex z = std::polar(r, th);
                    ++samples;
                    try {
                        const double v = functional(z);
                        if (v > round_value) {
                            round_value = v;
                            round_point = z;
                        }
                    } catch (EvaluationError& e) {
                        e.attach_point(z);
                        throw;
                    }
                }
            }
            c.value = round_value;
            c.point = round_point;
            c.u_center = std::log(std::max(1.0 - std::abs(c.point), s_end));
            c.t_center = std::arg(c.point);
            c.u_width *= shrink;
            c.t_width *= shrink;
            if (c.value > best.value) {
                best.value = c.value;
                best.point = c.point;
            }
        }
        last_change = best.value - prev_round;
        prev_round = best.value;
    }

    NormReport report;
    report.lower_bound = best.value;
    report.estimate = std::max(best.value, extrapolated);
    report.argmax = best.point;
    report.samples_used = samples;
    report.converged = spec.refine_rounds >= 1 &&
                       last_change <= rel_tol * std::max(best.value, 1e-300);
    return report;
}

NormReport estimate_schwarzian_norm(const HarmonicMap& f, const SamplingSpec& spec,
                                    double rel_tol) {
    return estimate_sup(
        [&f](Complex z) { return weighted_magnitude(schwarzian_harmonic(f, z), z); },
        spec, rel_tol);
}

NormReport estimate_omega_star_norm(const AnalyticMap& omega, const SamplingSpec& spec,
                                    double rel_tol) {
    return estimate_sup(
        [&omega](Complex z) {
            const Jet3 w = omega(z);
            const double den = 1.0 - std::norm(w.d0);
            if (den <= kBoundaryEpsilon) {
                throw DilatationOnBoundary("|omega| reaches 1 on the sampling grid");
            }
            return std::abs(w.d1) * (1.0 - std::norm(z)) / den;
        },
        spec, rel_tol);
}

NormReport estimate_omega_second_functional(const AnalyticMap& omega,
                                            const SamplingSpec& spec, double rel_tol) {
    return estimate_sup(
        [&omega](Complex z) {
            const Jet3 w = omega(z);
            const double den = 1.0 - std::norm(w.d0);
            if (den <= kBoundaryEpsilon) {
                throw DilatationOnBoundary("|omega| reaches 1 on the sampling grid");
            }
            const double weight = 1.0 - std::norm(z);
            return std::abs(w.d2) * weight * weight / den;
        },
        spec, rel_tol);
}

NormReport estimate_sup_modulus(const AnalyticMap& omega, const SamplingSpec& spec,
                                double rel_tol, double boundary_tol) {
    NormReport report = estimate_sup(
        [&omega](Complex z) { return std::abs(omega(z).d0); }, spec, rel_tol);
    report.boundary_degenerate = report.estimate >= 1.0 - boundary_tol;
    return report;
}

}  // namespace schwlab
