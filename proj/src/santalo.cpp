#include "scat2d/santalo.hpp"

#include <algorithm>
#include <cmath>

#include "scat2d/random.hpp"

namespace scat2d {

std::pair<double, double> liouville_integral(const Scene& s, int n_psi, int n_phi,
                                             const Caps& caps) {
    if (n_psi < 1 || n_phi < 1)
        throw input_error("liouville_integral: grid sizes must be >= 1");
    const double a = s.ball_radius;
    const double dpsi = 2.0 * M_PI / n_psi;
    const double dphi = M_PI / n_phi;
    CompensatedSum integral, excluded;
    for (int i = 0; i < n_psi; ++i) {
        const double psi = 2.0 * M_PI * (i + 0.5) / n_psi;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = -M_PI_2 + M_PI * (j + 0.5) / n_phi;
            const double weight = a * std::cos(phi) * dpsi * dphi;
            const TravellingTime tt = travelling_time(s, psi, phi, caps);
            if (const auto* f = std::get_if<Finite>(&tt)) {
                integral.add(f->t * weight);
            } else if (std::holds_alternative<Cutoff>(tt)) {
                excluded.add(weight);
            }
            // Grazing contributes t = 0 exactly.
        }
    }
    return {integral.value(), excluded.value()};
}

SantaloReport santalo_defect(const Scene& s, int n_psi, int n_phi, const Caps& caps) {
    SantaloReport rep;
    rep.n_psi = n_psi;
    rep.n_phi = n_phi;
    const auto [integral, excluded] = liouville_integral(s, n_psi, n_phi, caps);
    rep.integral = integral;
    rep.excluded_weight = excluded;
    double area = M_PI * s.ball_radius * s.ball_radius;
    for (const auto& e : s.obstacles) area -= ellipse_area(e);
    rep.phase_volume = 2.0 * M_PI * area;
    rep.defect = rep.phase_volume - rep.integral;
    return rep;
}

std::vector<std::pair<int, double>> trapped_fraction(const Scene& s, int n_samples,
                                                     std::uint64_t seed,
                                                     const std::vector<int>& cutoffs,
                                                     const Caps& caps) {
    if (n_samples < 1) throw input_error("trapped_fraction: n_samples must be >= 1");
    if (cutoffs.empty()) throw input_error("trapped_fraction: no cutoffs");
    for (std::size_t k = 0; k < cutoffs.size(); ++k) {
        if (cutoffs[k] < 1 || (k > 0 && cutoffs[k] <= cutoffs[k - 1]))
            throw input_error("trapped_fraction: cutoffs must be strictly increasing and >= 1");
    }

    Caps run = caps;
    run.max_reflections = cutoffs.back();

    DeterministicRng rng(seed);
    std::vector<long> trips(cutoffs.size(), 0);
    for (int n = 0; n < n_samples; ++n) {
        const double psi = rng.uniform(0.0, 2.0 * M_PI);
        // Inverse CDF of the cos weight on [-pi/2, pi/2].
        const double phi = std::asin(2.0 * rng.uniform() - 1.0);
        const Trajectory tr = trace(s, boundary_phase_point(s.ball_radius, psi, phi), run);
        // A trace capped at c stops once it records its c-th reflection, so a
        // sample trips cutoff c exactly when its reflection count reaches c.
        const int reached = tr.reflection_count();
        for (std::size_t k = 0; k < cutoffs.size(); ++k)
            if (reached >= cutoffs[k]) ++trips[k];
    }

    std::vector<std::pair<int, double>> out;
    out.reserve(cutoffs.size());
    for (std::size_t k = 0; k < cutoffs.size(); ++k)
        out.emplace_back(cutoffs[k], static_cast<double>(trips[k]) / n_samples);
    return out;
}

}  // namespace scat2d
