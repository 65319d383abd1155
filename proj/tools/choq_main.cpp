#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "choq/axioms.hpp"
#include "choq/gen.hpp"
#include "choq/integral.hpp"
#include "choq/io.hpp"
#include "choq/kadd.hpp"
#include "choq/setfun.hpp"

namespace {

using choq::CapacityDocument;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation / axiom failure
constexpr int kExitUsage = 2;    // malformed input or bad arguments

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

double default_tol() {
  if (const char* env = std::getenv("CHOQ_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw choq::DocumentError("CHOQ_TOL is not a number", "environment");
    }
  }
  return choq::kDefaultTol;
}

CapacityDocument::Format parse_format(const std::string& text,
                                      CapacityDocument::Format fallback) {
  if (text.empty()) return fallback;
  if (text == "dense") return CapacityDocument::Format::Dense;
  if (text == "sparse") return CapacityDocument::Format::Sparse;
  throw CLI::ValidationError("--format must be 'dense' or 'sparse'");
}

json validation_json(const choq::ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"subset", choq::elements_of(issue.subset)},
                      {"element", issue.element},
                      {"amount", issue.amount},
                      {"message", issue.describe()}});
  }
  return json{{"valid", report.valid()}, {"issues", std::move(issues)}};
}

json residual_json(const choq::ResidualReport& report) {
  return json{{"max_residual", report.max_residual},
              {"constant_value", report.constant_value},
              {"witness_set", choq::elements_of(report.witness_set)},
              {"witness_subset", choq::elements_of(report.witness_subset)},
              {"witness_index", report.witness_index}};
}

json axiom_report_json(const choq::AxiomReport& report) {
  json j{{"axiom", report.axiom},
         {"trials", report.trials},
         {"seed", report.seed}};
  switch (report.verdict) {
    case choq::Verdict::Pass: j["verdict"] = "pass"; break;
    case choq::Verdict::Fail: j["verdict"] = "fail"; break;
    case choq::Verdict::Inapplicable: j["verdict"] = "inapplicable"; break;
  }
  if (!report.note.empty()) j["note"] = report.note;
  if (report.counterexample) {
    json acts = json::array();
    for (const auto& act : report.counterexample->acts) acts.push_back(act);
    j["counterexample"] = {{"acts", std::move(acts)},
                           {"values", report.counterexample->values},
                           {"detail", report.counterexample->detail}};
  }
  return j;
}

/// Input fails the capacity invariants: reported with exit code 1, not 2.
struct CapacityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

choq::Capacity checked_capacity(const CapacityDocument& doc, double tol) {
  try {
    return choq::Capacity::checked(doc.as_set_function(), tol);
  } catch (const std::invalid_argument& ex) {
    throw CapacityFailure(ex.what());
  }
}

struct Options {
  std::string capacity_file;
  std::string act_file;
  std::string weights_file;
  std::string format;
  std::vector<std::string> axioms;
  std::string kind = "general";
  double tol = choq::kDefaultTol;
  double delta = 0.0;
  double floor = 0.1;
  std::uint64_t seed = 0;
  int trials = 200;
  int k = 0;
  int n = 0;
  int threads = 1;
  bool signed_mobius = false;
};

int run(int argc, char** argv) {
  CLI::App app{"Toolkit for capacities on finite subset lattices: "
               "Mobius/zeta transforms, Choquet and OWA aggregation, "
               "k-additivity classification and welfare-axiom checking"};
  app.require_subcommand(1);

  Options opt;
  opt.tol = default_tol();
  app.add_option("--tol", opt.tol, "tolerance for equality and monotonicity checks");
  app.add_option("--threads", opt.threads,
                 "reserved; results do not depend on this value");

  auto* transform = app.add_subcommand("transform", "convert capacity <-> Mobius form");
  transform->add_option("file", opt.capacity_file)->required();
  transform->add_option("--format", opt.format, "output encoding: dense|sparse");

  auto* validate = app.add_subcommand("validate", "check capacity or Mobius constraints");
  validate->add_option("file", opt.capacity_file)->required();

  auto* classify = app.add_subcommand("classify",
                                      "symmetry, belief, additivity order, weight profile");
  classify->add_option("file", opt.capacity_file)->required();

  auto* choquet = app.add_subcommand("choquet", "Choquet integral of an act");
  choquet->add_option("--capacity", opt.capacity_file)->required();
  choquet->add_option("--act", opt.act_file)->required();

  auto* owa_cmd = app.add_subcommand("owa", "ordered weighted average of an act");
  owa_cmd->add_option("--weights", opt.weights_file)->required();
  owa_cmd->add_option("--act", opt.act_file)->required();

  auto* gini = app.add_subcommand("gini",
                                  "welfare value of an act plus the equivalent OWA/capacity");
  gini->add_option("--act", opt.act_file)->required();
  gini->add_option("--delta", opt.delta, "inequality aversion, in (0, 1/(n-1))")->required();
  gini->add_option("--format", opt.format, "capacity encoding: dense|sparse");

  auto* decompose = app.add_subcommand("decompose",
                                       "binomial OWA decomposition of a symmetric capacity");
  decompose->add_option("file", opt.capacity_file)->required();

  auto* residuals = app.add_subcommand("residuals", "k-difference constancy residuals");
  residuals->add_option("file", opt.capacity_file)->required();
  residuals->add_option("--k", opt.k, "difference order (default 2)");

  auto* check = app.add_subcommand("check-axioms",
                                   "fuzz the Choquet functional of a capacity against axioms");
  check->add_option("file", opt.capacity_file)->required();
  check->add_option("--axiom", opt.axioms, "axiom ids, e.g. A3 A7'(2) A9(3)")->required();
  check->add_option("--trials", opt.trials);
  check->add_option("--seed", opt.seed);

  auto* gen = app.add_subcommand("gen", "generate a random capacity or weight vector");
  gen->add_option("--kind", opt.kind, "general|symmetric|kadditive|belief|weights");
  gen->add_option("--n", opt.n)->required();
  gen->add_option("--seed", opt.seed);
  gen->add_option("--k", opt.k, "additivity level for kadditive/belief/symmetric");
  gen->add_option("--floor", opt.floor, "pre-normalization level-k magnitude floor");
  gen->add_flag("--signed", opt.signed_mobius, "allow negative Mobius coefficients");
  gen->add_option("--format", opt.format, "output encoding: dense|sparse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (transform->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    if (doc.repr == CapacityDocument::Repr::Capacity) {
      const auto format = parse_format(opt.format, CapacityDocument::Format::Sparse);
      emit(CapacityDocument::make(doc.as_mobius(), format).to_json());
    } else {
      const auto format = parse_format(opt.format, CapacityDocument::Format::Dense);
      emit(CapacityDocument::make(doc.as_set_function(), format).to_json());
    }
    return kExitOk;
  }

  if (validate->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::ValidationReport report =
        doc.repr == CapacityDocument::Repr::Capacity
            ? choq::validate_capacity(doc.as_set_function(), opt.tol)
            : choq::validate_mobius_capacity(doc.as_mobius(), opt.tol);
    emit(validation_json(report));
    return report.valid() ? kExitOk : kExitFailure;
  }

  if (classify->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::Capacity cap = checked_capacity(doc, opt.tol);
    const bool symmetric = choq::is_symmetric(cap, opt.tol);
    json out{{"n", cap.n()},
             {"symmetric", symmetric},
             {"belief", choq::is_belief(cap, opt.tol)},
             {"additivity_order", choq::additivity_order(cap, opt.tol)}};
    if (symmetric) {
      const choq::WeightVector w = choq::capacity_to_owa(cap, opt.tol);
      out["weights"] = w.w;
      out["weight_kadd_order"] = choq::weight_kadd_order(w, opt.tol);
      out["equidistance_residual"] = choq::equidistance_check(w).max_residual;
    }
    emit(out);
    return kExitOk;
  }

  if (choquet->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::Capacity cap = checked_capacity(doc, opt.tol);
    const choq::Act act = choq::parse_act(choq::load_json_file(opt.act_file));
    emit(json{{"value", choq::choquet_sorted(cap, act)}});
    return kExitOk;
  }

  if (owa_cmd->parsed()) {
    const choq::WeightVector w =
        choq::parse_weights(choq::load_json_file(opt.weights_file));
    const choq::Act act = choq::parse_act(choq::load_json_file(opt.act_file));
    emit(json{{"value", choq::owa(w, act)}});
    return kExitOk;
  }

  if (gini->parsed()) {
    const choq::Act act = choq::parse_act(choq::load_json_file(opt.act_file));
    const int n = static_cast<int>(act.size());
    const choq::WeightVector w = choq::gini_owa_weights(n, opt.delta);
    const choq::Capacity cap = choq::owa_to_capacity(w);
    const auto format = parse_format(opt.format, CapacityDocument::Format::Dense);
    emit(json{{"value", choq::gini_functional(act, opt.delta)},
              {"scale", choq::gini_scale(n)},
              {"weights", w.w},
              {"capacity", CapacityDocument::make(cap.set_function(), format).to_json()}});
    return kExitOk;
  }

  if (decompose->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::Capacity cap = checked_capacity(doc, opt.tol);
    const std::vector<double> coeffs = choq::binomial_decomposition(cap, opt.tol);
    emit(json{{"additivity_order", choq::additivity_order(cap, opt.tol)},
              {"coefficients", coeffs}});
    return kExitOk;
  }

  if (residuals->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::Capacity cap = checked_capacity(doc, opt.tol);
    const int k = opt.k > 0 ? opt.k : 2;
    const choq::ResidualReport report = choq::k_difference_residuals(cap, k);
    json out = residual_json(report);
    out["k"] = k;
    emit(out);
    return kExitOk;
  }

  if (check->parsed()) {
    const CapacityDocument doc =
        CapacityDocument::from_json(choq::load_json_file(opt.capacity_file));
    const choq::Capacity cap = checked_capacity(doc, opt.tol);
    const choq::Functional h = choq::choquet_functional(cap);
    json reports = json::array();
    bool any_fail = false;
    for (const std::string& text : opt.axioms) {
      const choq::AxiomSpec spec = choq::parse_axiom(text);
      const choq::AxiomReport report = choq::check_axiom(spec, h, opt.trials, opt.seed);
      any_fail = any_fail || report.verdict == choq::Verdict::Fail;
      reports.push_back(axiom_report_json(report));
    }
    emit(json{{"reports", std::move(reports)}});
    return any_fail ? kExitFailure : kExitOk;
  }

  if (gen->parsed()) {
    if (opt.kind == "weights") {
      choq::SplitMix64 rng(opt.seed);
      emit(choq::weights_to_json(choq::random_weight_vector(opt.n, rng)));
      return kExitOk;
    }
    choq::GenConfig cfg;
    cfg.n = opt.n;
    cfg.seed = opt.seed;
    cfg.k = opt.k;
    cfg.floor = opt.floor;
    cfg.signed_mobius = opt.signed_mobius;
    if (opt.kind == "general") cfg.kind = choq::CapacityKind::General;
    else if (opt.kind == "symmetric") cfg.kind = choq::CapacityKind::Symmetric;
    else if (opt.kind == "kadditive") cfg.kind = choq::CapacityKind::KAdditive;
    else if (opt.kind == "belief") cfg.kind = choq::CapacityKind::Belief;
    else throw CLI::ValidationError("--kind must be general|symmetric|kadditive|belief|weights");
    const choq::Capacity cap = choq::random_capacity(cfg);
    const auto format = parse_format(opt.format, CapacityDocument::Format::Dense);
    emit(CapacityDocument::make(cap.set_function(), format).to_json());
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapacityFailure& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFailure;
  } catch (const choq::DocumentError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
}
