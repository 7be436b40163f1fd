// Deterministic uniform doubles on top of mt19937_64. The standard
// distributions are implementation-defined, so byte-stable outputs draw bits
// directly.
#pragma once

#include <cstdint>
#include <random>

namespace scat2d {

class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace scat2d
