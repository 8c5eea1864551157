#pragma once

#include <cstdint>
#include <random>

namespace kcover {

// All randomness in the project flows through this wrapper seeded with a
// single 64-bit value. Doubles are derived from raw bits explicitly so the
// stream is identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return n == 0 ? 0 : next_u64() % n;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace kcover
