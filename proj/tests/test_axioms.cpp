#include <doctest.h>

#include <cmath>

#include "choq/axioms.hpp"
#include "choq/gen.hpp"
#include "choq/integral.hpp"
#include "choq/setfun.hpp"

using namespace choq;

namespace {

Capacity sixths_capacity() {
  MobiusRepresentation m;
  m.n = 3;
  for (SubsetIndex a = 1; a <= full_mask(3); ++a) {
    if (cardinality(a) <= 2) m.coeffs[a] = 1.0 / 6.0;
  }
  return Capacity::checked(zeta_transform(m));
}

Capacity unanimity3() {
  SetFunction sf = SetFunction::zeros(3);
  sf[full_mask(3)] = 1.0;
  return Capacity::checked(sf);
}

}  // namespace

TEST_CASE("comonotone") {
  CHECK(comonotone({1.0, 2.0, 3.0}, {0.0, 0.0, 5.0}));
  CHECK_FALSE(comonotone({1.0, 2.0}, {2.0, 1.0}));
  CHECK(comonotone({4.0, 1.0, 9.0}, {7.0, 7.0, 7.0}));
  CHECK_THROWS_AS(comonotone({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("f_precedes") {
  Act f = {1.0, 5.0, 3.0};
  CHECK(f_precedes(f, 1, 3));
  CHECK_FALSE(f_precedes(f, 1, 2));  // 3 intervenes
  CHECK_FALSE(f_precedes(f, 2, 1));
  Act c = {2.0, 2.0, 2.0};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK_FALSE(f_precedes(c, i, j));
  }
}

TEST_CASE("build_transfer_acts") {
  Act f2 = build_transfer_acts({1.0, 2.0, 4.0}, 1, 2, 0.3);
  CHECK(f2[0] == doctest::Approx(1.3));
  CHECK(f2[1] == doctest::Approx(1.7));
  CHECK(f2[2] == doctest::Approx(4.0));

  Act f3 = build_transfer_acts({0.0, 1.0, 2.0, 3.0}, 1, 3, 0.1);
  CHECK(f3[0] == doctest::Approx(0.1));
  CHECK(f3[1] == doctest::Approx(0.8));
  CHECK(f3[2] == doctest::Approx(2.1));
  CHECK(f3[3] == doctest::Approx(3.0));

  Act same = build_transfer_acts({1.0, 2.0, 4.0}, 2, 2, 0.0);
  CHECK(same == Act{1.0, 2.0, 4.0});

  CHECK_THROWS_AS(build_transfer_acts({1.0, 2.0, 4.0}, 1, 2, 5.0), ComonotonicityBroken);
  CHECK_THROWS_AS(build_transfer_acts({1.0, 2.0}, 2, 2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(build_transfer_acts({1.0, 2.0}, 1, 2, -0.1), std::invalid_argument);
}

TEST_CASE("build_gift_family") {
  std::vector<Act> fam = build_gift_family({2.0, 2.0, 5.0}, 0b011, 1.0);
  REQUIRE(fam.size() == 4);
  CHECK(fam[0] == Act{2.0, 2.0, 5.0});
  CHECK(fam[1] == Act{3.0, 2.0, 5.0});
  CHECK(fam[2] == Act{2.0, 3.0, 5.0});
  CHECK(fam[3] == Act{3.0, 3.0, 5.0});

  std::vector<Act> single = build_gift_family({2.0, 2.0, 5.0}, 0b100, 1.0);
  REQUIRE(single.size() == 2);
  CHECK(single[1] == Act{2.0, 2.0, 6.0});

  CHECK_THROWS_AS(build_gift_family({2.0, 2.0, 5.0}, 0b011, 4.0), ComonotonicityBroken);
  CHECK_THROWS_AS(build_gift_family({2.0, 3.0, 5.0}, 0b011, 0.5), UnequalBaseValues);
}

TEST_CASE("a9_alternating_sum") {
  Functional h = choquet_functional(sixths_capacity());
  std::vector<Act> fam = build_gift_family({2.0, 2.0, 5.0}, 0b011, 1.0);
  CHECK(a9_alternating_sum(h, fam) == doctest::Approx(1.0 / 6.0));

  SetFunction add = SetFunction::zeros(3);
  for (SubsetIndex a = 0; a < add.size(); ++a) add[a] = cardinality(a) / 3.0;
  Functional mean = choquet_functional(Capacity::checked(add));
  CHECK(a9_alternating_sum(mean, fam) == doctest::Approx(0.0));

  std::vector<Act> zero = build_gift_family({2.0, 2.0, 5.0}, 0b011, 0.0);
  CHECK(a9_alternating_sum(h, zero) == doctest::Approx(0.0));

  std::vector<Act> broken(3, Act{1.0, 2.0, 3.0});
  CHECK_THROWS_AS(a9_alternating_sum(h, broken), std::invalid_argument);
}

TEST_CASE("parse_axiom") {
  CHECK(parse_axiom("A3").id == AxiomId::A3);
  CHECK(parse_axiom("A4'").id == AxiomId::A4Gift);
  CHECK(parse_axiom("A7").id == AxiomId::A7);
  AxiomSpec a7k = parse_axiom("A7(3)");
  CHECK(a7k.id == AxiomId::A7k);
  CHECK(a7k.k == 3);
  AxiomSpec a7p = parse_axiom("A7'(2)");
  CHECK(a7p.id == AxiomId::A7kGajdos);
  CHECK(a7p.k == 2);
  CHECK(parse_axiom("A9(4)").k == 4);
  CHECK(parse_axiom("A9(4)").name() == "A9(4)");
  CHECK_THROWS_AS(parse_axiom("A12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axiom("A7(x)"), std::invalid_argument);
}

TEST_CASE("check_axiom basics") {
  SplitMix64 wseed(71);
  Functional owa_h = owa_functional(random_weight_vector(4, wseed));
  CHECK(check_axiom(parse_axiom("A3"), owa_h, 100, 7).verdict == Verdict::Pass);

  Capacity asym = Capacity::checked(SetFunction(2, {0.0, 0.9, 0.1, 1.0}));
  AxiomReport fail = check_axiom(parse_axiom("A3"), choquet_functional(asym), 100, 7);
  REQUIRE(fail.verdict == Verdict::Fail);
  REQUIRE(fail.counterexample.has_value());
  // counterexample re-evaluates to a violation
  Functional h = choquet_functional(asym);
  const auto& ce = *fail.counterexample;
  REQUIRE(ce.acts.size() == 2);
  CHECK(std::abs(h.eval(ce.acts[0]) - h.eval(ce.acts[1])) > 1e-9);

  Functional sym2 = choquet_functional(owa_to_capacity(WeightVector({0.5, 1.0 / 3.0, 1.0 / 6.0})));
  CHECK(check_axiom(parse_axiom("A7"), sym2, 100, 11).verdict == Verdict::Pass);
  CHECK(check_axiom(parse_axiom("A7"), choquet_functional(unanimity3()), 100, 11).verdict == Verdict::Fail);
}

TEST_CASE("vacuous and inapplicable verdicts") {
  Functional h = choquet_functional(sixths_capacity());
  AxiomReport a1 = check_axiom(parse_axiom("A1"), h, 10, 1);
  CHECK(a1.verdict == Verdict::Pass);
  CHECK_FALSE(a1.note.empty());
  CHECK(check_axiom(parse_axiom("A2"), h, 10, 1).verdict == Verdict::Pass);
  // n = 3: A7'(3) has a single transfer position, nothing to compare
  CHECK(check_axiom(parse_axiom("A7'(3)"), h, 10, 1).verdict == Verdict::Inapplicable);
  CHECK_THROWS_AS(check_axiom(parse_axiom("A7'(9)"), h, 10, 1), std::invalid_argument);
}

TEST_CASE("replay determinism") {
  Capacity asym = Capacity::checked(SetFunction(2, {0.0, 0.9, 0.1, 1.0}));
  Functional h = choquet_functional(asym);
  AxiomReport a = check_axiom(parse_axiom("A3"), h, 50, 1234);
  AxiomReport b = check_axiom(parse_axiom("A3"), h, 50, 1234);
  CHECK(a.verdict == b.verdict);
  CHECK(a.trials == b.trials);
  REQUIRE(a.counterexample.has_value());
  REQUIRE(b.counterexample.has_value());
  CHECK(a.counterexample->acts == b.counterexample->acts);
  CHECK(a.counterexample->values == b.counterexample->values);
}

TEST_CASE("soundness sample: choquet passes A4, A5, A6 for any generated capacity") {
  SplitMix64 seeds(72);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 2 + static_cast<int>(seeds.next_below(5));
    Capacity cap = random_capacity(GenConfig{n, seeds.next_u64(), CapacityKind::General});
    Functional h = choquet_functional(cap);
    // A5' (strong monotonicity) is deliberately absent: a general capacity can
    // give a coordinate zero marginal weight, so strictness is not guaranteed.
    for (const char* id : {"A4", "A4'", "A5", "A6"}) {
      CHECK(check_axiom(parse_axiom(id), h, 50, 1000 + static_cast<std::uint64_t>(rep)).verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("soundness sample: A7'(k) tracks the additivity order of symmetric capacities") {
  SplitMix64 seeds(73);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 4 + static_cast<int>(seeds.next_below(3));  // 4..6
    const int k = 2 + static_cast<int>(seeds.next_below(static_cast<std::uint32_t>(n - 2)));
    Capacity cap = random_capacity(GenConfig{n, seeds.next_u64(), CapacityKind::Symmetric, k});
    REQUIRE(additivity_order(cap) == k);
    Functional h = choquet_functional(cap);
    CHECK(check_axiom(parse_axiom("A7'(" + std::to_string(k) + ")"), h, 100, 42).verdict == Verdict::Pass);
    AxiomReport below = check_axiom(parse_axiom("A7'(" + std::to_string(k - 1) + ")"), h, 200, 42);
    CHECK(below.verdict == Verdict::Fail);
    REQUIRE(below.counterexample.has_value());
  }
}

TEST_CASE("soundness sample: A9(k) tracks the order of general capacities") {
  SplitMix64 seeds(74);
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 4 + static_cast<int>(seeds.next_below(2));  // 4..5
    const int k = 2 + static_cast<int>(seeds.next_below(2));  // 2..3
    Capacity cap = random_capacity(GenConfig{n, seeds.next_u64(), CapacityKind::KAdditive, k});
    REQUIRE(additivity_order(cap) == k);
    Functional h = choquet_functional(cap);
    CHECK(check_axiom(parse_axiom("A9(" + std::to_string(k) + ")"), h, 100, 9).verdict == Verdict::Pass);
    CHECK(check_axiom(parse_axiom("A9(" + std::to_string(k - 1) + ")"), h, 200, 9).verdict == Verdict::Fail);
  }
}

TEST_CASE("soundness sample: A8 strict vs weak") {
  WeightVector uniform({0.25, 0.25, 0.25, 0.25});
  Functional mean = owa_functional(uniform);
  CHECK(check_axiom(parse_axiom("A8'"), mean, 100, 3).verdict == Verdict::Pass);
  CHECK(check_axiom(parse_axiom("A8"), mean, 100, 3).verdict == Verdict::Fail);

  Functional gini = owa_functional(gini_owa_weights(4, 0.2));
  CHECK(check_axiom(parse_axiom("A8"), gini, 100, 3).verdict == Verdict::Pass);
}
