// Deterministic random number utilities.
//
// All randomized routines in the library draw through this wrapper instead
// of std::*_distribution. The standard fully specifies mt19937_64 output,
// while the distributions are implementation-defined; building our draws
// directly on the raw 64-bit stream keeps every run bit-reproducible across
// standard libraries. Seed a generator once per run/instance via
// derive_seed(master, stream).
#pragma once

#include <cstdint>
#include <random>

namespace momst {

// SplitMix64 finalizer; good avalanche, used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent, reproducible seed for the stream-th consumer of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform over {0, ..., n-1}, exact via rejection on a bit mask.
  std::size_t uniform_index(std::size_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t v;
    do {
      v = gen_() & mask;
    } while (v >= n);
    return static_cast<std::size_t>(v);
  }

  bool coin() { return (gen_() & 1ULL) != 0; }

  // Poisson with mean 1 via the product-of-uniforms inverse transform.
  int poisson1() {
    constexpr double kExpNeg1 = 0.36787944117144233;
    int k = 0;
    double p = uniform01();
    while (p > kExpNeg1) {
      p *= uniform01();
      ++k;
    }
    return k;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace momst
