#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace choq {

/// Subsets of X = {1..n} encoded as bitmasks: bit (i-1) set <=> element i in A.
using SubsetIndex = std::uint32_t;

inline constexpr int kMaxElements = 24;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kSparsityEps = 1e-12;

constexpr SubsetIndex full_mask(int n) {
  return (SubsetIndex{1} << n) - 1;
}

constexpr SubsetIndex singleton(int element) {
  return SubsetIndex{1} << (element - 1);
}

constexpr bool contains(SubsetIndex a, int element) {
  return (a >> (element - 1)) & 1U;
}

inline int cardinality(SubsetIndex a) {
  return std::popcount(a);
}

inline void check_n(int n) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("element count n must be in [1, 24], got " +
                                std::to_string(n));
  }
}

/// Elements of A in ascending order, 1-based.
inline std::vector<int> elements_of(SubsetIndex a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(a)));
  while (a != 0) {
    int bit = std::countr_zero(a);
    out.push_back(bit + 1);
    a &= a - 1;
  }
  return out;
}

inline SubsetIndex mask_from_elements(const std::vector<int>& elems, int n) {
  SubsetIndex a = 0;
  for (int e : elems) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("subset element " + std::to_string(e) +
                                  " outside universe [1, " + std::to_string(n) + "]");
    }
    a |= singleton(e);
  }
  return a;
}

/// Binomial coefficient as a double; exact for n <= 24.
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / j;
  // values up to C(24,12) are integers well below 2^53
  return std::nearbyint(r);
}

}  // namespace choq
