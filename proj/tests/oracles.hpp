#pragma once

// Independent brute-force oracles for the test suite. These deliberately
// avoid the fast lattice sweeps and closed forms used by the library.

#include <cmath>
#include <vector>

#include "choq/bits.hpp"
#include "choq/integral.hpp"
#include "choq/setfun.hpp"

namespace choq::oracle {

/// m(A) = sum_{B subseteq A} (-1)^{|A\B|} mu(B), by direct submask expansion.
inline std::vector<double> naive_mobius(const SetFunction& sf) {
  std::vector<double> m(sf.values.size(), 0.0);
  for (SubsetIndex a = 0; a < sf.size(); ++a) {
    SubsetIndex b = a;
    while (true) {
      const int sign_card = cardinality(a) - cardinality(b);
      m[a] += ((sign_card & 1) ? -1.0 : 1.0) * sf[b];
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }
  return m;
}

/// mu(A) = sum_{B subseteq A} m(B), by direct submask expansion.
inline std::vector<double> naive_zeta(const std::vector<double>& m) {
  std::vector<double> mu(m.size(), 0.0);
  for (SubsetIndex a = 0; a < m.size(); ++a) {
    SubsetIndex b = a;
    while (true) {
      mu[a] += m[b];
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }
  return mu;
}

/// Coefficient of the i-th smallest component (1-based) in the welfare
/// functional, recovered by a finite difference on a strictly increasing
/// act. The functional is linear on each sorted region, so the difference
/// is exact up to rounding.
inline std::vector<double> gini_sorted_coefficients(int n, double delta) {
  Act base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
  const double eps = 0.25;  // keeps the sorted order intact
  const double h0 = gini_functional(base, delta);
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Act bumped = base;
    bumped[static_cast<std::size_t>(i)] += eps;
    coeffs[static_cast<std::size_t>(i)] = (gini_functional(bumped, delta) - h0) / eps;
  }
  return coeffs;
}

/// k-difference constancy residual recomputed from Mobius coefficients:
/// the deviation for (A, K) equals sum_{K strict-subset C subseteq A} m(C).
inline double kdiff_residual_via_mobius(const SetFunction& sf, int k) {
  const std::vector<double> m = naive_mobius(sf);
  const SubsetIndex full = full_mask(sf.n);
  double worst = 0.0;
  for (SubsetIndex k_set = 0; k_set <= full; ++k_set) {
    if (cardinality(k_set) != k) continue;
    const SubsetIndex comp = full & ~k_set;
    for (SubsetIndex r = comp; r != 0; r = (r - 1) & comp) {
      const SubsetIndex a = k_set | r;
      double dev = 0.0;
      for (SubsetIndex c = 0; c <= full; ++c) {
        if ((c & k_set) == k_set && (c | a) == a && c != k_set) dev += m[c];
      }
      worst = std::max(worst, std::abs(dev));
    }
  }
  return worst;
}

}  // namespace choq::oracle
