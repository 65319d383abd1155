#include "choq/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace choq {

namespace {

void check_act(int n, const Act& f) {
  if (static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("act length " + std::to_string(f.size()) +
                                " does not match n = " + std::to_string(n));
  }
  for (double x : f) {
    if (!std::isfinite(x)) throw std::invalid_argument("act entry is not finite");
  }
}

void check_delta(int n, double delta) {
  if (n < 2) throw std::invalid_argument("welfare functional needs n >= 2");
  const double upper = 1.0 / static_cast<double>(n - 1);
  if (!(delta > 0.0) || !(delta < upper)) {
    throw std::invalid_argument("delta must lie in the open interval (0, 1/(n-1))");
  }
}

std::vector<int> ascending_order(const Act& f) {
  std::vector<int> idx(f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return f[a] < f[b]; });
  return idx;
}

}  // namespace

void WeightVector::validate(double tol) const {
  double total = 0.0;
  for (double x : w) {
    if (!std::isfinite(x)) throw std::invalid_argument("weight is not finite");
    if (x < -tol) throw std::invalid_argument("negative OWA weight");
    total += x;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("OWA weights must sum to 1");
  }
}

double choquet_sorted(const Capacity& cap, const Act& f) {
  const int n = cap.n();
  check_act(n, f);
  const double lo = *std::min_element(f.begin(), f.end());
  const double shift = std::min(0.0, lo);  // translate so the act is >= 0
  const std::vector<int> idx = ascending_order(f);

  double total = shift;
  double prev = 0.0;
  SubsetIndex upper = full_mask(n);  // elements with the i-th smallest value and above
  for (int p = 0; p < n; ++p) {
    const double v = f[idx[p]] - shift;
    total += (v - prev) * cap[upper];
    prev = v;
    upper &= ~singleton(idx[p] + 1);
  }
  return total;
}

double choquet_mobius(const MobiusRepresentation& m, const Act& f) {
  check_act(m.n, f);
  double total = 0.0;
  for (const auto& [a, v] : m.coeffs) {
    if (a == 0) continue;
    double lo = std::numeric_limits<double>::infinity();
    for (int e : elements_of(a)) lo = std::min(lo, f[e - 1]);
    total += v * lo;
  }
  return total;
}

double owa(const WeightVector& w, const Act& f) {
  check_act(w.n(), f);
  Act sorted = f;
  std::stable_sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (int i = 0; i < w.n(); ++i) total += w[i] * sorted[static_cast<std::size_t>(i)];
  return total;
}

Capacity owa_to_capacity(const WeightVector& w) {
  const int n = w.n();
  check_n(n);
  w.validate();
  // level value by cardinality: mu(|T| = c) = w_{n-c+1} + ... + w_n
  std::vector<double> level(static_cast<std::size_t>(n) + 1, 0.0);
  for (int c = 1; c <= n; ++c) level[c] = level[c - 1] + w[n - c];
  level[n] = 1.0;
  SetFunction sf = SetFunction::zeros(n);
  for (SubsetIndex a = 0; a < sf.size(); ++a) sf[a] = level[cardinality(a)];
  return Capacity::unchecked(std::move(sf));
}

WeightVector capacity_to_owa(const Capacity& cap, double tol) {
  if (!is_symmetric(cap, tol)) throw NotSymmetric{};
  const int n = cap.n();
  std::vector<double> w(static_cast<std::size_t>(n));
  // representative subset per cardinality: {1..c}
  auto level = [&](int c) { return cap[full_mask(c == 0 ? 0 : c)]; };
  for (int i = 1; i <= n; ++i) {
    w[static_cast<std::size_t>(i - 1)] = level(n - i + 1) - level(n - i);
  }
  return WeightVector(std::move(w));
}

double gini_functional(const Act& f, double delta) {
  const int n = static_cast<int>(f.size());
  check_delta(n, delta);
  check_act(n, f);
  double total = 0.0;
  double spread = 0.0;
  for (int i = 0; i < n; ++i) {
    total += f[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      spread += std::abs(f[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(j)]);
    }
  }
  return total - delta * spread;
}

WeightVector gini_owa_weights(int n, double delta) {
  check_delta(n, delta);
  // On sorted components the pairwise-spread term contributes
  // sum_i (2i - n - 1) f_(i), so the coefficient of f_(i) is
  // 1 + (n + 1 - 2i) delta; the coefficients sum to n.
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    w[static_cast<std::size_t>(i - 1)] =
        (1.0 + static_cast<double>(n + 1 - 2 * i) * delta) / static_cast<double>(n);
  }
  return WeightVector(std::move(w));
}

WeightVector binomial_owa_weights(int n, int k) {
  check_n(n);
  if (k < 1 || k > n) throw std::invalid_argument("binomial OWA needs 1 <= k <= n");
  std::vector<double> w(static_cast<std::size_t>(n));
  const double denom = binom(n, k);
  for (int i = 1; i <= n; ++i) {
    w[static_cast<std::size_t>(i - 1)] = binom(n - i, k - 1) / denom;
  }
  return WeightVector(std::move(w));
}

std::vector<double> binomial_decomposition(const Capacity& cap, double tol) {
  const WeightVector w = capacity_to_owa(cap, tol);  // throws NotSymmetric
  const int n = cap.n();
  const int k = additivity_order(cap, tol);

  std::vector<WeightVector> basis;
  basis.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) basis.push_back(binomial_owa_weights(n, j));

  // Trailing rows i = n, n-1, ... are triangular: basis j vanishes at
  // positions i > n - j + 1, and its pivot entry is 1/C(n, j).
  std::vector<double> a(static_cast<std::size_t>(k), 0.0);
  for (int j = 1; j <= k; ++j) {
    const int row = n - j;  // 0-based index of position n - j + 1
    double rhs = w[row];
    for (int l = 1; l < j; ++l) rhs -= a[static_cast<std::size_t>(l - 1)] * basis[static_cast<std::size_t>(l - 1)][row];
    a[static_cast<std::size_t>(j - 1)] = rhs / basis[static_cast<std::size_t>(j - 1)][row];
  }

  for (int i = 0; i < n; ++i) {
    double rec = 0.0;
    for (int j = 1; j <= k; ++j) rec += a[static_cast<std::size_t>(j - 1)] * basis[static_cast<std::size_t>(j - 1)][i];
    if (std::abs(rec - w[i]) > tol) {
      throw std::runtime_error("binomial decomposition residual exceeds tolerance");
    }
  }
  return a;
}

}  // namespace choq
