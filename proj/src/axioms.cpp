#include "choq/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace choq {

namespace {

constexpr double kEqTol = 1e-9;
constexpr double kStrictMargin = 1e-12;  // scaled by the transfer amount t

double min_adjacent_gap(const Act& f) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < f.size(); ++i) gap = std::min(gap, f[i] - f[i - 1]);
  return gap;
}

/// Headroom of the gift: distance from the block value to the next strictly
/// larger entry, or +inf when the block holds the maximum.
double gift_headroom(const Act& f, SubsetIndex block) {
  const double v = f[static_cast<std::size_t>(elements_of(block).front() - 1)];
  double room = std::numeric_limits<double>::infinity();
  for (double x : f) {
    if (x > v) room = std::min(room, x - v);
  }
  return room;
}

struct TrialOutcome {
  bool violated = false;
  Counterexample ce;
};

TrialOutcome ok() { return {}; }

TrialOutcome violation(std::vector<Act> acts, std::vector<double> values,
                       std::string detail) {
  TrialOutcome out;
  out.violated = true;
  out.ce = {std::move(acts), std::move(values), std::move(detail)};
  return out;
}

TrialOutcome trial_a3(const Functional& h, SplitMix64& rng) {
  const int n = h.n;
  Act f = random_act(n, rng);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(p)] = p;
  for (int p = n - 1; p > 0; --p) {
    std::swap(perm[static_cast<std::size_t>(p)],
              perm[rng.next_below(static_cast<std::uint32_t>(p + 1))]);
  }
  Act g(f.size());
  for (int p = 0; p < n; ++p) g[static_cast<std::size_t>(p)] = f[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
  const double hf = h.eval(f);
  const double hg = h.eval(g);
  if (std::abs(hf - hg) > kEqTol) {
    return violation({f, g}, {hf, hg}, "permuted act changes the value");
  }
  return ok();
}

TrialOutcome trial_a4(const Functional& h, SplitMix64& rng, bool gift) {
  const int n = h.n;
  Act f = random_act(n, rng, ActShape::Nondecreasing);
  Act g = random_act(n, rng, ActShape::Nondecreasing);
  Act fp = f;
  Act gp = g;
  if (gift) {
    // common gift t e_i keeping both acts nondecreasing
    const int i = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
    double room = 1.0;
    if (i + 1 < n) {
      room = std::min(f[static_cast<std::size_t>(i + 1)] - f[static_cast<std::size_t>(i)],
                      g[static_cast<std::size_t>(i + 1)] - g[static_cast<std::size_t>(i)]);
    }
    if (room <= 0.0) return ok();  // tied coordinates, no admissible gift
    const double t = rng.uniform(0.1, 0.9) * room;
    fp[static_cast<std::size_t>(i)] += t;
    gp[static_cast<std::size_t>(i)] += t;
  } else {
    const Act hshift = random_act(n, rng, ActShape::Nondecreasing);
    for (int p = 0; p < n; ++p) {
      fp[static_cast<std::size_t>(p)] += hshift[static_cast<std::size_t>(p)];
      gp[static_cast<std::size_t>(p)] += hshift[static_cast<std::size_t>(p)];
    }
  }
  const double d0 = h.eval(f) - h.eval(g);
  const double d1 = h.eval(fp) - h.eval(gp);
  if ((d0 > kEqTol && d1 < -kEqTol) || (d0 < -kEqTol && d1 > kEqTol)) {
    return violation({f, g, fp, gp}, {d0, d1}, "preference reversed by a common shift");
  }
  return ok();
}

TrialOutcome trial_a5(const Functional& h, SplitMix64& rng, bool strict) {
  const int n = h.n;
  Act g = random_act(n, rng);
  Act f = g;
  if (strict) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
    const double t = 0.1 + rng.next_double();
    f[static_cast<std::size_t>(j)] += t;
    const double d = h.eval(f) - h.eval(g);
    if (d <= kStrictMargin * t) {
      return violation({f, g}, {h.eval(f), h.eval(g)}, "strict dominance not rewarded");
    }
  } else {
    for (double& x : f) {
      if (rng.next_bool(0.5)) x += 2.0 * rng.next_double();
    }
    const double d = h.eval(f) - h.eval(g);
    if (d < -kStrictMargin) {
      return violation({f, g}, {h.eval(f), h.eval(g)}, "pointwise dominance violated");
    }
  }
  return ok();
}

TrialOutcome trial_a7(const Functional& h, SplitMix64& rng, int k) {
  const int n = h.n;
  Act f = random_act(n, rng, ActShape::StrictInterior);
  const int positions = n - k + 1;
  const int i = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(positions)));
  int j = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(positions - 1)));
  if (j >= i) ++j;
  const double maxcoef = binom(k - 1, (k - 1) / 2);
  const double t = rng.uniform(0.1, 0.9) * min_adjacent_gap(f) / (2.0 * maxcoef);
  const Act fi = build_transfer_acts(f, i, k, t);
  const Act fj = build_transfer_acts(f, j, k, t);
  const double hi = h.eval(fi);
  const double hj = h.eval(fj);
  if (std::abs(hi - hj) > kEqTol) {
    std::ostringstream os;
    os << "reward scheme at positions " << i << " and " << j << " valued differently";
    return violation({f, fi, fj}, {h.eval(f), hi, hj}, os.str());
  }
  return ok();
}

TrialOutcome trial_a8(const Functional& h, SplitMix64& rng, bool strict) {
  const int n = h.n;
  Act f = random_act(n, rng, ActShape::StrictInterior);
  const int i = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - 1)));
  const double gap = f[static_cast<std::size_t>(i + 1)] - f[static_cast<std::size_t>(i)];
  const double t = rng.uniform(0.1, 0.9) * gap / 2.0;
  Act fp = f;
  fp[static_cast<std::size_t>(i)] += t;      // poorer of the two gains
  fp[static_cast<std::size_t>(i + 1)] -= t;  // richer gives
  const double d = h.eval(fp) - h.eval(f);
  if (strict ? (d <= kStrictMargin * t) : (d < -kEqTol)) {
    return violation({f, fp}, {h.eval(f), h.eval(fp)},
                     strict ? "rich-to-poor transfer not strictly preferred"
                            : "rich-to-poor transfer penalized");
  }
  return ok();
}

TrialOutcome trial_a9(const Functional& h, SplitMix64& rng, int k) {
  const int n = h.n;
  std::vector<int> elems(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) elems[static_cast<std::size_t>(p)] = p + 1;
  SubsetIndex block = 0;
  for (int p = 0; p < k; ++p) {
    const int q = p + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - p)));
    std::swap(elems[static_cast<std::size_t>(p)], elems[static_cast<std::size_t>(q)]);
    block |= singleton(elems[static_cast<std::size_t>(p)]);
  }
  const Act f = random_act(n, rng, ActShape::EqualBlock, block);
  const Act g = random_act(n, rng, ActShape::EqualBlock, block);
  double room = std::min(gift_headroom(f, block), gift_headroom(g, block));
  if (!std::isfinite(room)) room = 1.0;
  if (room <= 0.0) return ok();
  const double t = rng.uniform(0.1, 0.9) * room;
  const double sf = a9_alternating_sum(h, build_gift_family(f, block, t));
  const double sg = a9_alternating_sum(h, build_gift_family(g, block, t));
  if (std::abs(sf - sg) > kEqTol) {
    return violation({f, g}, {sf, sg}, "alternating gift sums differ across base acts");
  }
  return ok();
}

}  // namespace

Functional choquet_functional(Capacity cap) {
  const int n = cap.n();
  return {n, [cap = std::move(cap)](const Act& f) { return choquet_sorted(cap, f); }};
}

Functional owa_functional(WeightVector w) {
  const int n = w.n();
  return {n, [w = std::move(w)](const Act& f) { return owa(w, f); }};
}

bool comonotone(const Act& f, const Act& g) {
  if (f.size() != g.size()) throw std::invalid_argument("comonotone: length mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if ((f[i] - f[j]) * (g[i] - g[j]) < 0.0) return false;
    }
  }
  return true;
}

bool f_precedes(const Act& f, int i, int j) {
  const double fi = f[static_cast<std::size_t>(i - 1)];
  const double fj = f[static_cast<std::size_t>(j - 1)];
  if (!(fi < fj)) return false;
  for (double x : f) {
    if (fi < x && x < fj) return false;
  }
  return true;
}

Act build_transfer_acts(const Act& f, int i, int k, double t) {
  const int n = static_cast<int>(f.size());
  if (k < 1 || k > n) throw std::invalid_argument("transfer needs 1 <= k <= n");
  if (i < 1 || i > n - k + 1) throw std::invalid_argument("transfer position out of range");
  if (t < 0.0) throw std::invalid_argument("transfer amount must be nonnegative");
  Act out = f;
  for (int r = 0; r < k; ++r) {
    const double coef = binom(k - 1, r) * ((r & 1) ? -1.0 : 1.0);
    out[static_cast<std::size_t>(i + r - 1)] += coef * t;
  }
  if (!comonotone(f, out)) throw ComonotonicityBroken{};
  return out;
}

std::vector<Act> build_gift_family(const Act& f, SubsetIndex block, double t) {
  if (block == 0) throw std::invalid_argument("gift block must be nonempty");
  const std::vector<int> members = elements_of(block);
  for (int e : members) {
    if (e > static_cast<int>(f.size())) throw std::invalid_argument("gift block outside the act");
  }
  const double base = f[static_cast<std::size_t>(members.front() - 1)];
  for (int e : members) {
    if (f[static_cast<std::size_t>(e - 1)] != base) throw UnequalBaseValues{};
  }
  const std::size_t count = std::size_t{1} << members.size();
  std::vector<Act> family;
  family.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    Act fb = f;
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (b & (std::size_t{1} << p)) fb[static_cast<std::size_t>(members[p] - 1)] += t;
    }
    if (!comonotone(f, fb)) throw ComonotonicityBroken{};
    family.push_back(std::move(fb));
  }
  return family;
}

double a9_alternating_sum(const Functional& h, const std::vector<Act>& family) {
  if (family.empty() || (family.size() & (family.size() - 1)) != 0) {
    throw std::invalid_argument("gift family must hold 2^|S| acts");
  }
  double total = 0.0;
  for (std::size_t b = 0; b < family.size(); ++b) {
    const double v = h.eval(family[b]);
    total += (std::popcount(b) & 1) ? -v : v;
  }
  return total;
}

std::string AxiomSpec::name() const {
  switch (id) {
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A4Gift: return "A4'";
    case AxiomId::A5: return "A5";
    case AxiomId::A5Strict: return "A5'";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::A7k: return "A7(" + std::to_string(k) + ")";
    case AxiomId::A7kGajdos: return "A7'(" + std::to_string(k) + ")";
    case AxiomId::A8: return "A8";
    case AxiomId::A8Weak: return "A8'";
    case AxiomId::A9: return "A9";
    case AxiomId::A9k: return "A9(" + std::to_string(k) + ")";
  }
  return "?";
}

AxiomSpec parse_axiom(const std::string& text) {
  std::string head = text;
  int k = 0;
  const auto paren = text.find('(');
  if (paren != std::string::npos) {
    if (text.back() != ')') throw std::invalid_argument("malformed axiom id: " + text);
    head = text.substr(0, paren);
    const std::string inner = text.substr(paren + 1, text.size() - paren - 2);
    try {
      k = std::stoi(inner);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed axiom parameter: " + text);
    }
  }
  AxiomSpec spec;
  spec.k = k;
  if (head == "A1") spec.id = AxiomId::A1;
  else if (head == "A2") spec.id = AxiomId::A2;
  else if (head == "A3") spec.id = AxiomId::A3;
  else if (head == "A4") spec.id = AxiomId::A4;
  else if (head == "A4'") spec.id = AxiomId::A4Gift;
  else if (head == "A5") spec.id = AxiomId::A5;
  else if (head == "A5'") spec.id = AxiomId::A5Strict;
  else if (head == "A6") spec.id = AxiomId::A6;
  else if (head == "A7" && k == 0) spec.id = AxiomId::A7;
  else if (head == "A7") spec.id = AxiomId::A7k;
  else if (head == "A7'") spec.id = AxiomId::A7kGajdos;
  else if (head == "A8") spec.id = AxiomId::A8;
  else if (head == "A8'") spec.id = AxiomId::A8Weak;
  else if (head == "A9" && k == 0) spec.id = AxiomId::A9;
  else if (head == "A9") spec.id = AxiomId::A9k;
  else throw std::invalid_argument("unknown axiom id: " + text);
  return spec;
}

AxiomReport check_axiom(const AxiomSpec& spec, const Functional& h, int trials,
                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_axiom needs trials >= 1");
  if (h.n < 1 || !h.eval) throw std::invalid_argument("functional is not usable");

  AxiomReport report;
  report.axiom = spec.name();
  report.seed = seed;

  const int n = h.n;
  int k = spec.k;
  switch (spec.id) {
    case AxiomId::A1:
    case AxiomId::A2:
      report.note = "vacuous: any real-valued functional induces a continuous weak order";
      return report;
    case AxiomId::A7:
      k = 2;
      break;
    case AxiomId::A7k:
    case AxiomId::A7kGajdos:
    case AxiomId::A9k:
      if (k < 1 || k > n) throw std::invalid_argument("axiom parameter k out of range");
      break;
    case AxiomId::A9:
      k = 2;
      break;
    default:
      break;
  }

  auto inapplicable = [&](const std::string& why) {
    report.verdict = Verdict::Inapplicable;
    report.note = why;
    return report;
  };
  switch (spec.id) {
    case AxiomId::A7:
    case AxiomId::A7k:
    case AxiomId::A7kGajdos:
      if (n - k + 1 < 2) return inapplicable("needs at least two transfer positions (n >= k + 1)");
      break;
    case AxiomId::A8:
    case AxiomId::A8Weak:
      if (n < 2) return inapplicable("transfers need n >= 2");
      break;
    case AxiomId::A9:
      if (n < 2) return inapplicable("gift pairs need n >= 2");
      break;
    default:
      break;
  }

  // A6 is existential: pass as soon as a strict pair is found.
  if (spec.id == AxiomId::A6) {
    Act last_f, last_g;
    double last_df = 0.0, last_dg = 0.0;
    for (int t = 0; t < trials; ++t) {
      SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(t));
      last_f = random_act(n, rng);
      last_g = random_act(n, rng);
      last_df = h.eval(last_f);
      last_dg = h.eval(last_g);
      if (std::abs(last_df - last_dg) > kEqTol) {
        report.trials = t + 1;
        return report;
      }
    }
    report.trials = trials;
    report.verdict = Verdict::Fail;
    report.counterexample = Counterexample{
        {last_f, last_g}, {last_df, last_dg}, "no strictly ranked pair found"};
    return report;
  }

  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(t));
    TrialOutcome outcome;
    switch (spec.id) {
      case AxiomId::A3: outcome = trial_a3(h, rng); break;
      case AxiomId::A4: outcome = trial_a4(h, rng, /*gift=*/false); break;
      case AxiomId::A4Gift: outcome = trial_a4(h, rng, /*gift=*/true); break;
      case AxiomId::A5: outcome = trial_a5(h, rng, /*strict=*/false); break;
      case AxiomId::A5Strict: outcome = trial_a5(h, rng, /*strict=*/true); break;
      case AxiomId::A7:
      case AxiomId::A7k:
      case AxiomId::A7kGajdos: outcome = trial_a7(h, rng, k); break;
      case AxiomId::A8: outcome = trial_a8(h, rng, /*strict=*/true); break;
      case AxiomId::A8Weak: outcome = trial_a8(h, rng, /*strict=*/false); break;
      case AxiomId::A9:
      case AxiomId::A9k: outcome = trial_a9(h, rng, k); break;
      default: break;
    }
    if (outcome.violated) {
      report.trials = t + 1;
      report.verdict = Verdict::Fail;
      report.counterexample = std::move(outcome.ce);
      return report;
    }
  }
  report.trials = trials;
  return report;
}

}  // namespace choq
