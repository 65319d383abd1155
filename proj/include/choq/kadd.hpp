#pragma once

#include <vector>

#include "choq/integral.hpp"
#include "choq/setfun.hpp"

namespace choq {

/// Max deviation of a constancy check, with the witness achieving it.
/// For capacity checks the witness is the (A, K) pair of subsets; for
/// weight checks witness_index is the offending position i (1-based).
struct ResidualReport {
  double max_residual = 0.0;
  double constant_value = 0.0;  // the reference value the witness deviates from
  SubsetIndex witness_set = 0;     // A
  SubsetIndex witness_subset = 0;  // K = {i_1..i_k}
  int witness_index = 0;
};

/// The n-k+1 alternating sums sum_{j=0}^{k-1} (-1)^j C(k-1,j) w_{i+j}.
/// For a symmetric capacity of additivity order at most k they are all
/// equal to the Mobius coefficient at cardinality k.
std::vector<double> binomial_weight_sums(const WeightVector& w, int k);

/// Smallest k whose binomial weight sums have spread (max - min) <= tol.
int weight_kadd_order(const WeightVector& w, double tol = kDefaultTol);

/// Max deviation of consecutive differences w_i - w_{i+1} from w_1 - w_2.
/// Zero iff the symmetric capacity of w is at most 2-additive.
ResidualReport equidistance_check(const WeightVector& w);

/// Over all A and pairs i, j in A: deviation of
/// mu(A) - mu(A\i) - mu(A\j) + mu(A\ij) from mu(ij) - mu(i) - mu(j).
/// Zero iff the capacity is at most 2-additive.
ResidualReport second_difference_residuals(const Capacity& cap);

/// Over all A with |A| >= k and all k-subsets K of A: deviation of
/// sum_{B subseteq K} (-1)^|B| mu(A\B) from its value at A = K.
/// Zero iff the capacity is at most k-additive.
ResidualReport k_difference_residuals(const Capacity& cap, int k);

}  // namespace choq
