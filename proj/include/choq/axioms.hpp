#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "choq/gen.hpp"
#include "choq/integral.hpp"

namespace choq {

struct ComonotonicityBroken : std::runtime_error {
  ComonotonicityBroken() : std::runtime_error("perturbation breaks comonotonicity with the base act") {}
};

struct UnequalBaseValues : std::runtime_error {
  UnequalBaseValues() : std::runtime_error("gift block coordinates must share one value") {}
};

/// Opaque deterministic evaluator Act -> real on acts of fixed dimension.
struct Functional {
  int n = 0;
  std::function<double(const Act&)> eval;
};

Functional choquet_functional(Capacity cap);
Functional owa_functional(WeightVector w);

/// True iff no strict order reversal: (f_i - f_j)(g_i - g_j) >= 0 for all i, j.
bool comonotone(const Act& f, const Act& g);

/// True iff f_i < f_j with no strictly intermediate value in f (1-based).
bool f_precedes(const Act& f, int i, int j);

/// The transfer act f^i with f^i_{i+r} = f_{i+r} + (-1)^r C(k-1, r) t for
/// r = 0..k-1 (1-based position i, 1 <= i <= n-k+1). For k = 2 this is the
/// plain transfer +t at i, -t at i+1. Throws ComonotonicityBroken if the
/// result reverses the order of f.
Act build_transfer_acts(const Act& f, int i, int k, double t);

/// The 2^|S| gift acts f^B = f + t 1_B for B subseteq S, in submask-rank
/// order: entry b corresponds to the B selecting the b-th combination of
/// the bits of `block` (entry 0 is f itself). All coordinates of `block`
/// must share one value and every f^B must stay comonotone with f.
std::vector<Act> build_gift_family(const Act& f, SubsetIndex block, double t);

/// sum_B (-1)^|B| H(f^B) over a complete gift family.
double a9_alternating_sum(const Functional& h, const std::vector<Act>& family);

enum class AxiomId {
  A1,      // weak order (vacuous for a real-valued functional)
  A2,      // continuity (vacuous)
  A3,      // symmetry under permutations
  A4,      // weak independence of income source
  A4Gift,  // A4': order-preserving gift
  A5,      // monotonicity
  A5Strict,// A5': strong monotonicity
  A6,      // non-triviality
  A7,      // order-preserving transfer (the k = 2 reward scheme)
  A7k,     // A7(k)
  A7kGajdos, // A7'(k)
  A8,      // inequality aversion (strict)
  A8Weak,  // A8'
  A9,      // alternating gift sums on pairs
  A9k,     // A9(k)
};

struct AxiomSpec {
  AxiomId id = AxiomId::A3;
  int k = 0;  // required for the parametric axioms

  std::string name() const;
};

/// Parses "A3", "A4'", "A7(3)", "A7'(2)", "A9(4)", ... Throws on unknown ids.
AxiomSpec parse_axiom(const std::string& text);

enum class Verdict { Pass, Fail, Inapplicable };

struct Counterexample {
  std::vector<Act> acts;
  std::vector<double> values;
  std::string detail;
};

struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::Pass;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

/// Fuzzes H against the axiom over `trials` seed-derived instances.
/// Fail verdicts carry a counterexample that re-evaluates to a violation.
/// A pass is statistical (no counterexample found); a fail is conclusive.
AxiomReport check_axiom(const AxiomSpec& spec, const Functional& h, int trials,
                        std::uint64_t seed);

}  // namespace choq
