#pragma once

#include <map>
#include <string>
#include <vector>

#include "choq/bits.hpp"

namespace choq {

/// Dense real-valued function on the subset lattice of X = {1..n}.
struct SetFunction {
  int n = 0;
  std::vector<double> values;  // 2^n entries, indexed by SubsetIndex

  SetFunction() = default;
  SetFunction(int n_, std::vector<double> values_);

  static SetFunction zeros(int n);

  double operator[](SubsetIndex a) const { return values[a]; }
  double& operator[](SubsetIndex a) { return values[a]; }
  SubsetIndex size() const { return static_cast<SubsetIndex>(values.size()); }
};

/// Sparse Mobius representation: absent subsets carry coefficient 0.
struct MobiusRepresentation {
  int n = 0;
  std::map<SubsetIndex, double> coeffs;

  double at(SubsetIndex a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? 0.0 : it->second;
  }
  double sum() const;
};

struct ValidationIssue {
  enum class Kind {
    BoundaryEmpty,       // mu(empty) != 0
    BoundaryFull,        // mu(X) != 1
    Monotonicity,        // mu(A) > mu(A u {i}) on a covering pair
    MobiusEmpty,         // m(empty) != 0
    MobiusSum,           // sum m != 1
    MobiusMonotonicity,  // sum_{i in B subseteq A} m(B) < 0
  };
  Kind kind;
  SubsetIndex subset = 0;  // the A involved
  int element = 0;         // the i involved (0 when not applicable)
  double amount = 0.0;     // magnitude of the violation
  std::string describe() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

/// A set function satisfying the capacity invariants (boundary + monotone).
/// `checked` validates at the given tolerance and throws on violation;
/// `unchecked` trusts the caller (generators that are valid by construction).
class Capacity {
 public:
  static Capacity checked(SetFunction sf, double tol = kDefaultTol);
  static Capacity unchecked(SetFunction sf) { return Capacity(std::move(sf)); }

  int n() const { return sf_.n; }
  double operator[](SubsetIndex a) const { return sf_.values[a]; }
  const SetFunction& set_function() const { return sf_; }

 private:
  explicit Capacity(SetFunction sf) : sf_(std::move(sf)) {}
  SetFunction sf_;
};

/// Fast in-place Mobius transform, O(n 2^n); coefficients with magnitude
/// at most sparsity_eps are dropped from the sparse map.
MobiusRepresentation mobius_transform(const SetFunction& sf,
                                      double sparsity_eps = kSparsityEps);

/// Dense variant, keeping every coefficient.
std::vector<double> mobius_dense(const SetFunction& sf);

/// Zeta transform mu(A) = sum_{B subseteq A} m(B), exact inverse of the
/// Mobius transform, O(n 2^n).
SetFunction zeta_transform(const MobiusRepresentation& m);

ValidationReport validate_capacity(const SetFunction& sf, double tol = kDefaultTol);

/// Checks m(empty) = 0, sum m = 1, and the monotonicity constraints
/// sum_{i in B subseteq A} m(B) >= -tol for every A and i in A.
ValidationReport validate_mobius_capacity(const MobiusRepresentation& m,
                                          double tol = kDefaultTol);

bool is_symmetric(const Capacity& cap, double tol = kDefaultTol);

/// True iff every Mobius coefficient is >= -tol (totally monotone).
bool is_belief(const Capacity& cap, double tol = kDefaultTol);

/// Smallest k in {1..n} such that |m(A)| <= tol for all |A| > k.
/// Thresholded classification: reports "at most k", exact zeros not assumed.
int additivity_order(const Capacity& cap, double tol = kDefaultTol);

}  // namespace choq
