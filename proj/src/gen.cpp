#include "choq/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace choq {

namespace {

constexpr int kRejectionBudget = 10000;

/// Random k-subset of {1..n} as a bitmask (partial Fisher-Yates).
SubsetIndex random_k_subset(int n, int k, SplitMix64& rng) {
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 1);
  SubsetIndex mask = 0;
  for (int p = 0; p < k; ++p) {
    const int q = p + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - p)));
    std::swap(elems[static_cast<std::size_t>(p)], elems[static_cast<std::size_t>(q)]);
    mask |= singleton(elems[static_cast<std::size_t>(p)]);
  }
  return mask;
}

/// Sparse coefficients on levels 1..max_level, nonnegative, with the forced
/// subset (when nonzero) getting at least `floor` before normalization.
MobiusRepresentation sample_mobius(int n, int max_level, SplitMix64& rng,
                                   SubsetIndex forced, double floor,
                                   bool signed_mobius) {
  MobiusRepresentation m;
  m.n = n;
  const SubsetIndex full = full_mask(n);
  for (SubsetIndex a = 1; a <= full; ++a) {
    if (cardinality(a) > max_level) continue;
    if (a == forced) continue;
    if (!rng.next_bool(0.5)) continue;
    double v = rng.next_double();
    if (signed_mobius && rng.next_bool(0.25)) v = -0.3 * v;
    m.coeffs.emplace(a, v);
  }
  if (forced != 0) m.coeffs[forced] = floor + rng.next_double();
  if (m.coeffs.empty()) m.coeffs.emplace(singleton(1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)))), 1.0);
  return m;
}

Capacity general_capacity(int n, SplitMix64& rng) {
  SetFunction sf = SetFunction::zeros(n);
  const SubsetIndex full = full_mask(n);
  for (SubsetIndex a = 1; a <= full; ++a) sf[a] = rng.next_double();
  // monotone envelope: each value at least the max over covered subsets
  for (SubsetIndex a = 1; a <= full; ++a) {
    for (int b = 0; b < n; ++b) {
      const SubsetIndex bit = SubsetIndex{1} << b;
      if (a & bit) sf[a] = std::max(sf[a], sf[a ^ bit]);
    }
  }
  const double top = sf[full];
  for (SubsetIndex a = 1; a < full; ++a) sf[a] /= top;
  sf[full] = 1.0;
  return Capacity::unchecked(std::move(sf));
}

Capacity symmetric_level_capacity(int n, int k, double floor, SplitMix64& rng) {
  // one Mobius mass per cardinality 1..k, level k held above the floor
  std::vector<double> level(static_cast<std::size_t>(k) + 1, 0.0);
  for (int c = 1; c < k; ++c) level[static_cast<std::size_t>(c)] = rng.next_double();
  level[static_cast<std::size_t>(k)] = floor + rng.next_double();
  double z = 0.0;
  for (int c = 1; c <= k; ++c) z += binom(n, c) * level[static_cast<std::size_t>(c)];
  MobiusRepresentation m;
  m.n = n;
  const SubsetIndex full = full_mask(n);
  for (SubsetIndex a = 1; a <= full; ++a) {
    const int c = cardinality(a);
    if (c <= k && level[static_cast<std::size_t>(c)] != 0.0) {
      m.coeffs.emplace(a, level[static_cast<std::size_t>(c)] / z);
    }
  }
  return Capacity::unchecked(zeta_transform(m));
}

Capacity mobius_sampled_capacity(const GenConfig& cfg, int max_level,
                                 bool force_level, SplitMix64& rng) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const SubsetIndex forced =
        force_level ? random_k_subset(cfg.n, max_level, rng) : 0;
    MobiusRepresentation m = sample_mobius(cfg.n, max_level, rng, forced,
                                           cfg.floor, cfg.signed_mobius);
    double total = m.sum();
    if (total < 0.2) continue;  // keep normalization well-conditioned
    for (auto& [a, v] : m.coeffs) v /= total;
    if (cfg.signed_mobius && !validate_mobius_capacity(m, kSparsityEps).valid()) {
      continue;
    }
    Capacity cap = Capacity::unchecked(zeta_transform(m));
    if (force_level && additivity_order(cap) != max_level) continue;
    return cap;
  }
  throw std::runtime_error("capacity sampling: rejection budget exhausted");
}

}  // namespace

Capacity random_capacity(const GenConfig& cfg) {
  check_n(cfg.n);
  SplitMix64 rng(cfg.seed);
  switch (cfg.kind) {
    case CapacityKind::General:
      return general_capacity(cfg.n, rng);
    case CapacityKind::Symmetric:
      if (cfg.k > 0) {
        if (cfg.k > cfg.n) throw std::invalid_argument("k exceeds n");
        return symmetric_level_capacity(cfg.n, cfg.k, cfg.floor, rng);
      }
      return owa_to_capacity(random_weight_vector(cfg.n, rng));
    case CapacityKind::KAdditive: {
      if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("k-additive sampling needs 1 <= k <= n");
      return mobius_sampled_capacity(cfg, cfg.k, /*force_level=*/true, rng);
    }
    case CapacityKind::Belief: {
      GenConfig belief = cfg;
      belief.signed_mobius = false;
      const int max_level = cfg.k > 0 ? cfg.k : cfg.n;
      if (max_level > cfg.n) throw std::invalid_argument("k exceeds n");
      return mobius_sampled_capacity(belief, max_level, cfg.k > 0, rng);
    }
  }
  throw std::invalid_argument("unknown capacity kind");
}

WeightVector random_weight_vector(int n, SplitMix64& rng) {
  check_n(n);
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& x : w) {
    x = 0.01 + rng.next_double();
    total += x;
  }
  for (double& x : w) x /= total;
  return WeightVector(std::move(w));
}

Act random_act(int n, SplitMix64& rng, ActShape shape, SubsetIndex block) {
  check_n(n);
  Act f(static_cast<std::size_t>(n));
  switch (shape) {
    case ActShape::General:
      for (double& x : f) x = 10.0 * rng.next_double();
      break;
    case ActShape::Nondecreasing:
      for (double& x : f) x = 10.0 * rng.next_double();
      std::sort(f.begin(), f.end());
      break;
    case ActShape::StrictInterior: {
      double v = rng.next_double();
      for (double& x : f) {
        v += 0.1 + rng.next_double();
        x = v;
      }
      break;
    }
    case ActShape::EqualBlock: {
      for (double& x : f) x = 10.0 * rng.next_double();
      const double shared = 10.0 * rng.next_double();
      for (int e : elements_of(block)) f[static_cast<std::size_t>(e - 1)] = shared;
      break;
    }
  }
  return f;
}

std::pair<Act, Act> random_comonotone_pair(int n, SplitMix64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int p = n - 1; p > 0; --p) {
    const int q = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(p + 1)));
    std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)]);
  }
  Act a(static_cast<std::size_t>(n));
  Act b(static_cast<std::size_t>(n));
  for (double& x : a) x = 10.0 * rng.next_double();
  for (double& x : b) x = 10.0 * rng.next_double();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Act f(static_cast<std::size_t>(n));
  Act g(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    f[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = a[static_cast<std::size_t>(p)];
    g[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = b[static_cast<std::size_t>(p)];
  }
  return {std::move(f), std::move(g)};
}

}  // namespace choq
