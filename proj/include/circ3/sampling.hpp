#pragma once

// Deterministic seeded sampling. uniform01 maps the raw engine output to a
// double explicitly (std::uniform_real_distribution is implementation
// defined, which would break bit-for-bit report reproducibility).

#include <cstdint>
#include <random>

#include "circ3/tensor.hpp"

namespace circ3 {

struct SampleBox {
    double lo = 0.1;
    double hi = 2.0;
};

class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    Vec3 point(const SampleBox& box) {
        return {uniform(box.lo, box.hi), uniform(box.lo, box.hi), uniform(box.lo, box.hi)};
    }

    // Integer in [lo, hi], inclusive.
    int integer(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace circ3
