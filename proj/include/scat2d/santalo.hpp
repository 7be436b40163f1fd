// Liouville integral of the travelling time over the inward phase cylinder,
// the phase-volume identity check, and the trapped-fraction decay experiment.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scat2d/billiard.hpp"

namespace scat2d {

struct SantaloReport {
    double integral = 0.0;         // quadrature of t_K against the Liouville weight
    double phase_volume = 0.0;     // 2*pi*(pi*a^2 - sum of obstacle areas)
    double defect = 0.0;           // phase_volume - integral, ~ measure of Trap
    double excluded_weight = 0.0;  // Liouville weight of Cutoff nodes
    int n_psi = 0;
    int n_phi = 0;
};

// Midpoint tensor quadrature of t_K(psi,phi) * a * cos(phi) over
// [0,2pi) x [-pi/2,pi/2]. Cutoff nodes contribute zero to the integral and
// their full weight to excluded_weight. Compensated summation keeps the
// result independent of reduction order.
std::pair<double, double> liouville_integral(const Scene& s, int n_psi, int n_phi,
                                             const Caps& caps = {});

SantaloReport santalo_defect(const Scene& s, int n_psi, int n_phi,
                             const Caps& caps = {});

// Share of Liouville-distributed samples whose trace reaches each reflection
// cutoff without exiting. Non-increasing in the cutoff by construction.
std::vector<std::pair<int, double>> trapped_fraction(const Scene& s, int n_samples,
                                                     std::uint64_t seed,
                                                     const std::vector<int>& cutoffs,
                                                     const Caps& caps = {});

// Neumaier compensated accumulator.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace scat2d
