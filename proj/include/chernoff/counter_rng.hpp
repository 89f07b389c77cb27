#pragma once

#include <cstdint>

namespace chernoff {

// Stateless counter-based generator: every draw is a pure function of
// (seed, counter, stream), so parallel chunks of work produce the same
// stream regardless of how trials are split across threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t bits(std::uint64_t counter, std::uint64_t stream) const {
    std::uint64_t x = seed_;
    x ^= mix(counter * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL);
    x ^= mix(stream * 0x94d049bb133111ebULL + 0xd6e8feb86659fd93ULL);
    return mix(x);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter, std::uint64_t stream) const {
    return static_cast<double>(bits(counter, stream) >> 11) * 0x1.0p-53;
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace chernoff
