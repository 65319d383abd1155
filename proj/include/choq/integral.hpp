#pragma once

#include <stdexcept>
#include <vector>

#include "choq/setfun.hpp"

namespace choq {

/// Income profile / score vector: f_i is the value of element i.
using Act = std::vector<double>;

struct NotSymmetric : std::runtime_error {
  NotSymmetric() : std::runtime_error("capacity is not symmetric") {}
};

/// OWA weights: w_1 applies to the smallest component of the act.
struct WeightVector {
  std::vector<double> w;

  WeightVector() = default;
  explicit WeightVector(std::vector<double> w_) : w(std::move(w_)) {}

  int n() const { return static_cast<int>(w.size()); }
  double operator[](int i) const { return w[static_cast<std::size_t>(i)]; }

  /// Throws unless all weights are >= -tol and they sum to 1 within tol.
  void validate(double tol = kDefaultTol) const;
};

/// Choquet integral via the telescoping sum over sorted components.
/// Acts with negative entries are handled by the translation
/// C(f) = C(f + c) - c with c = -min_i f_i (asymmetric extension).
double choquet_sorted(const Capacity& cap, const Act& f);

/// Choquet integral in Mobius form: sum_A m(A) min_{i in A} f_i.
double choquet_mobius(const MobiusRepresentation& m, const Act& f);

/// Inner product of w with the ascending-sorted components of f.
double owa(const WeightVector& w, const Act& f);

/// The unique symmetric capacity whose Choquet integral is OWA_w:
/// mu(T) = sum_{i = n-|T|+1}^{n} w_i.
Capacity owa_to_capacity(const WeightVector& w);

/// Inverse of owa_to_capacity; throws NotSymmetric if the capacity is not
/// symmetric within tol.
WeightVector capacity_to_owa(const Capacity& cap, double tol = kDefaultTol);

/// Raw welfare value sum_i f_i - delta * sum_{i<j} |f_i - f_j|.
/// Requires 0 < delta < 1/(n-1), so n >= 2.
double gini_functional(const Act& f, double delta);

/// Normalized OWA weights of the welfare functional above. The coefficient
/// of the i-th smallest component is 1 + (n+1-2i) delta; the coefficients
/// sum to n, so gini_functional(f, delta) = n * owa(weights, f).
WeightVector gini_owa_weights(int n, double delta);

/// Scale factor relating gini_functional and its normalized OWA form.
inline double gini_scale(int n) { return static_cast<double>(n); }

/// k-binomial OWA weights w_i = C(n-i, k-1) / C(n, k), for 1 <= k <= n.
WeightVector binomial_owa_weights(int n, int k);

/// Coefficients a_1..a_k expressing a symmetric capacity of additivity
/// order k as a weighted sum of the first k binomial OWA operators,
/// i.e. capacity_to_owa(cap) = sum_j a_j binomial_owa_weights(n, j).
/// Solved from the triangular trailing k x k system; throws if the
/// reconstruction residual over all n weights exceeds tol.
std::vector<double> binomial_decomposition(const Capacity& cap,
                                           double tol = kDefaultTol);

}  // namespace choq
