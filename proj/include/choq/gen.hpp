#pragma once

#include <cstdint>
#include <utility>

#include "choq/integral.hpp"
#include "choq/rng.hpp"
#include "choq/setfun.hpp"

namespace choq {

enum class CapacityKind {
  General,    // uniform values repaired by a monotone envelope
  Symmetric,  // from a random weight vector, or per-level Mobius mass when k is set
  KAdditive,  // sparse Mobius up to level k, one level-k coefficient forced
  Belief,     // nonnegative sparse Mobius
};

struct GenConfig {
  int n = 0;
  std::uint64_t seed = 0;
  CapacityKind kind = CapacityKind::General;
  int k = 0;                  // target additivity level (KAdditive / Symmetric)
  double floor = 0.1;         // pre-normalization magnitude floor at level k
  bool signed_mobius = false; // KAdditive only: allow negative coefficients,
                              // accepted by rejection against the monotonicity
                              // constraints (budget 10000 attempts)
};

/// Deterministic function of cfg; every output passes validate_capacity.
Capacity random_capacity(const GenConfig& cfg);

/// Nonnegative weights summing to 1.
WeightVector random_weight_vector(int n, SplitMix64& rng);

enum class ActShape {
  General,        // entries uniform in [0, 10)
  Nondecreasing,  // sorted
  StrictInterior, // strictly increasing with adjacent gaps >= 0.1
  EqualBlock,     // coordinates of the block share one sampled value
};

Act random_act(int n, SplitMix64& rng, ActShape shape = ActShape::General,
               SubsetIndex block = 0);

/// Two acts sharing a common ranking, hence comonotone by construction.
std::pair<Act, Act> random_comonotone_pair(int n, SplitMix64& rng);

}  // namespace choq
