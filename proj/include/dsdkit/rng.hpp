#pragma once

#include <cstdint>
#include <random>

namespace dsdkit::rng {

// SplitMix64 finalizer. Used to derive independent per-stream seeds so
// Monte Carlo walks stay order-insensitive under parallel execution.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + index * 0x9e3779b97f4a7c15ULL);
}

// Deterministic generator. std::mt19937_64 is fully specified by the
// standard; doubles and bounded ints are produced without std::*_distribution
// (whose output is implementation-defined), so identical seeds give
// identical streams on every platform.
class Engine {
 public:
  explicit Engine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), exact (Lemire with rejection).
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint64_t range = bound;
    std::uint64_t x = gen_() & 0xffffffffULL;
    __uint128_t m = static_cast<__uint128_t>(x) * range;
    auto low = static_cast<std::uint64_t>(m) & 0xffffffffULL;
    if (low < range) {
      const std::uint64_t threshold = (0x100000000ULL - range) % range;
      while (low < threshold) {
        x = gen_() & 0xffffffffULL;
        m = static_cast<__uint128_t>(x) * range;
        low = static_cast<std::uint64_t>(m) & 0xffffffffULL;
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dsdkit::rng
