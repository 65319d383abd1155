#include "choq/setfun.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace choq {

namespace {

void check_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument("set function entry is not finite");
  }
}

std::string subset_str(SubsetIndex a) {
  if (a == 0) return "{}";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(a)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

SetFunction::SetFunction(int n_, std::vector<double> values_)
    : n(n_), values(std::move(values_)) {
  check_n(n);
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("set function needs exactly 2^n values");
  }
  check_finite(values);
}

SetFunction SetFunction::zeros(int n) {
  check_n(n);
  SetFunction sf;
  sf.n = n;
  sf.values.assign(std::size_t{1} << n, 0.0);
  return sf;
}

double MobiusRepresentation::sum() const {
  double s = 0.0;
  for (const auto& [a, v] : coeffs) s += v;
  return s;
}

std::string ValidationIssue::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::BoundaryEmpty:
      os << "mu(empty) = " << amount << ", expected 0";
      break;
    case Kind::BoundaryFull:
      os << "mu(X) = " << amount << ", expected 1";
      break;
    case Kind::Monotonicity:
      os << "mu decreases by " << amount << " from " << subset_str(subset)
         << " when adding element " << element;
      break;
    case Kind::MobiusEmpty:
      os << "m(empty) = " << amount << ", expected 0";
      break;
    case Kind::MobiusSum:
      os << "sum of Mobius coefficients is " << amount << ", expected 1";
      break;
    case Kind::MobiusMonotonicity:
      os << "sum_{" << element << " in B subseteq " << subset_str(subset)
         << "} m(B) = " << amount << " < 0";
      break;
  }
  return os.str();
}

Capacity Capacity::checked(SetFunction sf, double tol) {
  ValidationReport report = validate_capacity(sf, tol);
  if (!report.valid()) {
    throw std::invalid_argument("not a capacity: " + report.issues.front().describe());
  }
  return Capacity(std::move(sf));
}

std::vector<double> mobius_dense(const SetFunction& sf) {
  std::vector<double> v = sf.values;
  const SubsetIndex size = sf.size();
  // per-bit sweep: subtract the value of the subset missing each bit
  for (int b = 0; b < sf.n; ++b) {
    const SubsetIndex bit = SubsetIndex{1} << b;
    for (SubsetIndex a = 0; a < size; ++a) {
      if (a & bit) v[a] -= v[a ^ bit];
    }
  }
  return v;
}

MobiusRepresentation mobius_transform(const SetFunction& sf, double sparsity_eps) {
  std::vector<double> dense = mobius_dense(sf);
  MobiusRepresentation m;
  m.n = sf.n;
  for (SubsetIndex a = 0; a < dense.size(); ++a) {
    if (std::abs(dense[a]) > sparsity_eps) m.coeffs.emplace(a, dense[a]);
  }
  return m;
}

SetFunction zeta_transform(const MobiusRepresentation& m) {
  check_n(m.n);
  SetFunction sf = SetFunction::zeros(m.n);
  for (const auto& [a, v] : m.coeffs) {
    if (a >= sf.size()) throw std::invalid_argument("Mobius subset outside the lattice");
    sf[a] = v;
  }
  const SubsetIndex size = sf.size();
  for (int b = 0; b < m.n; ++b) {
    const SubsetIndex bit = SubsetIndex{1} << b;
    for (SubsetIndex a = 0; a < size; ++a) {
      if (a & bit) sf[a] += sf[a ^ bit];
    }
  }
  return sf;
}

ValidationReport validate_capacity(const SetFunction& sf, double tol) {
  ValidationReport report;
  const SubsetIndex full = full_mask(sf.n);
  if (std::abs(sf[0]) > tol) {
    report.issues.push_back({ValidationIssue::Kind::BoundaryEmpty, 0, 0, sf[0]});
  }
  if (std::abs(sf[full] - 1.0) > tol) {
    report.issues.push_back({ValidationIssue::Kind::BoundaryFull, full, 0, sf[full]});
  }
  // covering pairs (A, A u {i}) suffice by transitivity
  for (SubsetIndex a = 0; a <= full; ++a) {
    for (int i = 1; i <= sf.n; ++i) {
      if (contains(a, i)) continue;
      const double drop = sf[a] - sf[a | singleton(i)];
      if (drop > tol) {
        report.issues.push_back({ValidationIssue::Kind::Monotonicity, a, i, drop});
      }
    }
  }
  return report;
}

ValidationReport validate_mobius_capacity(const MobiusRepresentation& m, double tol) {
  check_n(m.n);
  ValidationReport report;
  const double at_empty = m.at(0);
  if (std::abs(at_empty) > tol) {
    report.issues.push_back({ValidationIssue::Kind::MobiusEmpty, 0, 0, at_empty});
  }
  const double total = m.sum();
  if (std::abs(total - 1.0) > tol) {
    report.issues.push_back({ValidationIssue::Kind::MobiusSum, 0, 0, total});
  }
  // For each i, zeta-transform the coefficients of sets containing i:
  // g_i(A) = sum_{i in B subseteq A} m(B), required >= -tol for all A with i in A.
  const SubsetIndex size = SubsetIndex{1} << m.n;
  std::vector<double> g(size);
  for (int i = 1; i <= m.n; ++i) {
    const SubsetIndex ibit = singleton(i);
    g.assign(size, 0.0);
    for (const auto& [a, v] : m.coeffs) {
      if (a & ibit) g[a] = v;
    }
    for (int b = 0; b < m.n; ++b) {
      const SubsetIndex bit = SubsetIndex{1} << b;
      for (SubsetIndex a = 0; a < size; ++a) {
        if (a & bit) g[a] += g[a ^ bit];
      }
    }
    for (SubsetIndex a = 0; a < size; ++a) {
      if ((a & ibit) && g[a] < -tol) {
        report.issues.push_back({ValidationIssue::Kind::MobiusMonotonicity, a, i, g[a]});
      }
    }
  }
  return report;
}

bool is_symmetric(const Capacity& cap, double tol) {
  const SubsetIndex full = full_mask(cap.n());
  std::vector<double> seen(static_cast<std::size_t>(cap.n()) + 1);
  std::vector<bool> have(static_cast<std::size_t>(cap.n()) + 1, false);
  for (SubsetIndex a = 0; a <= full; ++a) {
    const int c = cardinality(a);
    if (!have[c]) {
      seen[c] = cap[a];
      have[c] = true;
    } else if (std::abs(cap[a] - seen[c]) > tol) {
      return false;
    }
  }
  return true;
}

bool is_belief(const Capacity& cap, double tol) {
  std::vector<double> m = mobius_dense(cap.set_function());
  for (double v : m) {
    if (v < -tol) return false;
  }
  return true;
}

int additivity_order(const Capacity& cap, double tol) {
  std::vector<double> m = mobius_dense(cap.set_function());
  int k = 1;  // sum m = 1 forces mass at level >= 1
  for (SubsetIndex a = 0; a < m.size(); ++a) {
    if (std::abs(m[a]) > tol) k = std::max(k, cardinality(a));
  }
  return k;
}

}  // namespace choq
