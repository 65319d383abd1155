#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "choq/integral.hpp"
#include "choq/setfun.hpp"

namespace choq {

/// Malformed document; `location` points at the offending field.
struct DocumentError : std::runtime_error {
  std::string location;
  DocumentError(const std::string& msg, std::string loc)
      : std::runtime_error(msg + " (at " + loc + ")"), location(std::move(loc)) {}
};

/// On-disk form of a set function: dense 2^n array in bitmask order
/// (bit i-1 <=> element i) or a sparse subset/value list with subsets as
/// ascending element lists; absent sparse entries are zero.
struct CapacityDocument {
  enum class Repr { Capacity, Mobius };
  enum class Format { Dense, Sparse };

  int n = 0;
  Repr repr = Repr::Capacity;
  Format format = Format::Dense;
  std::vector<double> dense;
  std::vector<std::pair<SubsetIndex, double>> sparse;  // ascending mask order

  static CapacityDocument from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static CapacityDocument make(const SetFunction& sf, Format format);
  static CapacityDocument make(const MobiusRepresentation& m, Format format);

  /// Zeta-transforms first when repr is Mobius.
  SetFunction as_set_function() const;
  /// Mobius-transforms first when repr is Capacity.
  MobiusRepresentation as_mobius(double sparsity_eps = kSparsityEps) const;
};

Act parse_act(const nlohmann::json& j);
nlohmann::json act_to_json(const Act& f);

WeightVector parse_weights(const nlohmann::json& j);
nlohmann::json weights_to_json(const WeightVector& w);

nlohmann::json load_json_file(const std::string& path);

}  // namespace choq
