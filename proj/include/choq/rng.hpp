#pragma once

#include <cstdint>

namespace choq {

/// SplitMix64: fully specified 64-bit generator used for all random fixtures.
/// State update x += 0x9E3779B97F4A7C15, output is the murmur-style finalizer.
/// All sampling decisions are integer-based, so identical seeds reproduce
/// bit-identical streams on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  /// Uniform double in [0, 1) with 53 bits of entropy.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, bound). Modulo reduction: bias is irrelevant for
  /// fixture generation and the result is platform-independent.
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next_u64() % bound);
  }

  bool next_bool(double p) { return next_double() < p; }

  /// Stream-split rule: substream i of seed s is seeded with
  /// finalize(s ^ finalize(i + 1)). Disjoint streams for parallel trials.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(finalize(seed ^ finalize(stream + 1)));
  }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace choq
