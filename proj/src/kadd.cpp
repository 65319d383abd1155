#include "choq/kadd.hpp"

#include <cmath>
#include <stdexcept>

namespace choq {

namespace {

/// sum_{B subseteq K} (-1)^|B| mu(A \ B)
double alternating_difference(const Capacity& cap, SubsetIndex a, SubsetIndex k_set) {
  double total = 0.0;
  SubsetIndex b = k_set;
  while (true) {
    total += (cardinality(b) & 1) ? -cap[a & ~b] : cap[a & ~b];
    if (b == 0) break;
    b = (b - 1) & k_set;
  }
  return total;
}

}  // namespace

std::vector<double> binomial_weight_sums(const WeightVector& w, int k) {
  const int n = w.n();
  if (k < 1 || k > n) throw std::invalid_argument("binomial weight sums need 1 <= k <= n");
  std::vector<double> sums(static_cast<std::size_t>(n - k + 1));
  for (int i = 1; i <= n - k + 1; ++i) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) {
      const double term = binom(k - 1, j) * w[i + j - 1];
      s += (j & 1) ? -term : term;
    }
    sums[static_cast<std::size_t>(i - 1)] = s;
  }
  return sums;
}

int weight_kadd_order(const WeightVector& w, double tol) {
  const int n = w.n();
  for (int k = 1; k <= n; ++k) {
    const std::vector<double> sums = binomial_weight_sums(w, k);
    double lo = sums.front();
    double hi = sums.front();
    for (double s : sums) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (hi - lo <= tol) return k;
  }
  return n;  // unreachable: at k = n there is a single sum
}

ResidualReport equidistance_check(const WeightVector& w) {
  const int n = w.n();
  ResidualReport report;
  if (n < 2) return report;
  const double ref = w[0] - w[1];
  report.constant_value = ref;
  report.witness_index = 1;
  for (int i = 1; i < n; ++i) {
    const double dev = std::abs((w[i - 1] - w[i]) - ref);
    if (dev > report.max_residual) {
      report.max_residual = dev;
      report.witness_index = i;
    }
  }
  return report;
}

ResidualReport second_difference_residuals(const Capacity& cap) {
  return k_difference_residuals(cap, 2);
}

ResidualReport k_difference_residuals(const Capacity& cap, int k) {
  const int n = cap.n();
  if (k < 1 || k > n) throw std::invalid_argument("k-difference needs 1 <= k <= n");
  const SubsetIndex full = full_mask(n);
  ResidualReport report;
  bool first = true;
  for (SubsetIndex k_set = 0; k_set <= full; ++k_set) {
    if (cardinality(k_set) != k) continue;
    const double ref = alternating_difference(cap, k_set, k_set);
    if (first) {
      report.constant_value = ref;
      report.witness_set = k_set;
      report.witness_subset = k_set;
      first = false;
    }
    const SubsetIndex comp = full & ~k_set;
    // supersets A = K u R, R nonempty
    for (SubsetIndex r = comp; r != 0; r = (r - 1) & comp) {
      const SubsetIndex a = k_set | r;
      const double dev = std::abs(alternating_difference(cap, a, k_set) - ref);
      if (dev > report.max_residual) {
        report.max_residual = dev;
        report.constant_value = ref;
        report.witness_set = a;
        report.witness_subset = k_set;
      }
    }
  }
  return report;
}

}  // namespace choq
