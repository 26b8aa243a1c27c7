#pragma once

#include <cstdint>

// Splitmix64. Deterministic across platforms, unlike the std distributions,
// so seeded campaigns reproduce bit-for-bit everywhere.

namespace tgc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, k); k > 0. Rejection sampling keeps it unbiased.
  int below(int k) {
    std::uint64_t bound = static_cast<std::uint64_t>(k);
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Per-instance seed for sharded campaigns: independent of execution order.
inline std::uint64_t instance_seed(std::uint64_t seed, int index) {
  Rng r(seed ^ (0xA0761D6478BD642Full * static_cast<std::uint64_t>(index + 1)));
  return r.next();
}

}  // namespace tgc
