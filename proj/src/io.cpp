#include "choq/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace choq {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& loc) {
  if (!j.is_number()) throw DocumentError("expected a number", loc);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DocumentError("value is not finite", loc);
  return v;
}

std::vector<double> number_array(const json& j, const std::string& loc) {
  if (!j.is_array()) throw DocumentError("expected an array of numbers", loc);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number_at(j[i], loc + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

CapacityDocument CapacityDocument::from_json(const json& j) {
  CapacityDocument doc;
  if (!j.is_object()) throw DocumentError("document must be an object", "$");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw DocumentError("missing integer field 'n'", "$.n");
  }
  doc.n = j["n"].get<int>();
  if (doc.n < 1 || doc.n > kMaxElements) {
    throw DocumentError("n out of supported range [1, 24]", "$.n");
  }
  const std::string repr = j.value("repr", std::string{});
  if (repr == "capacity") doc.repr = Repr::Capacity;
  else if (repr == "mobius") doc.repr = Repr::Mobius;
  else throw DocumentError("field 'repr' must be \"capacity\" or \"mobius\"", "$.repr");

  const bool has_dense = j.contains("dense");
  const bool has_sparse = j.contains("sparse");
  if (has_dense == has_sparse) {
    throw DocumentError("exactly one of 'dense' or 'sparse' must be present", "$");
  }
  if (has_dense) {
    doc.format = Format::Dense;
    doc.dense = number_array(j["dense"], "$.dense");
    if (doc.dense.size() != (std::size_t{1} << doc.n)) {
      throw DocumentError("dense array must hold exactly 2^n values", "$.dense");
    }
  } else {
    doc.format = Format::Sparse;
    const json& entries = j["sparse"];
    if (!entries.is_array()) throw DocumentError("'sparse' must be an array", "$.sparse");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string loc = "$.sparse[" + std::to_string(i) + "]";
      const json& e = entries[i];
      if (!e.is_object() || !e.contains("subset") || !e.contains("value")) {
        throw DocumentError("entry needs 'subset' and 'value'", loc);
      }
      if (!e["subset"].is_array()) throw DocumentError("'subset' must be an element list", loc + ".subset");
      std::vector<int> elems;
      for (const auto& x : e["subset"]) {
        if (!x.is_number_integer()) throw DocumentError("subset elements must be integers", loc + ".subset");
        elems.push_back(x.get<int>());
      }
      SubsetIndex mask;
      try {
        mask = mask_from_elements(elems, doc.n);
      } catch (const std::invalid_argument& ex) {
        throw DocumentError(ex.what(), loc + ".subset");
      }
      doc.sparse.emplace_back(mask, number_at(e["value"], loc + ".value"));
    }
    std::sort(doc.sparse.begin(), doc.sparse.end());
    for (std::size_t i = 1; i < doc.sparse.size(); ++i) {
      if (doc.sparse[i].first == doc.sparse[i - 1].first) {
        throw DocumentError("duplicate subset in sparse list", "$.sparse");
      }
    }
  }
  return doc;
}

json CapacityDocument::to_json() const {
  json j;
  j["n"] = n;
  j["repr"] = repr == Repr::Capacity ? "capacity" : "mobius";
  if (format == Format::Dense) {
    j["dense"] = dense;
  } else {
    json entries = json::array();
    for (const auto& [mask, value] : sparse) {
      entries.push_back({{"subset", elements_of(mask)}, {"value", value}});
    }
    j["sparse"] = std::move(entries);
  }
  return j;
}

CapacityDocument CapacityDocument::make(const SetFunction& sf, Format format) {
  CapacityDocument doc;
  doc.n = sf.n;
  doc.repr = Repr::Capacity;
  doc.format = format;
  if (format == Format::Dense) {
    doc.dense = sf.values;
  } else {
    for (SubsetIndex a = 0; a < sf.size(); ++a) {
      if (sf[a] != 0.0) doc.sparse.emplace_back(a, sf[a]);
    }
  }
  return doc;
}

CapacityDocument CapacityDocument::make(const MobiusRepresentation& m, Format format) {
  CapacityDocument doc;
  doc.n = m.n;
  doc.repr = Repr::Mobius;
  doc.format = format;
  if (format == Format::Dense) {
    doc.dense.assign(std::size_t{1} << m.n, 0.0);
    for (const auto& [a, v] : m.coeffs) doc.dense[a] = v;
  } else {
    doc.sparse.assign(m.coeffs.begin(), m.coeffs.end());
  }
  return doc;
}

SetFunction CapacityDocument::as_set_function() const {
  if (repr == Repr::Mobius) return zeta_transform(as_mobius());
  if (format == Format::Dense) return SetFunction(n, dense);
  SetFunction sf = SetFunction::zeros(n);
  for (const auto& [a, v] : sparse) sf[a] = v;
  return sf;
}

MobiusRepresentation CapacityDocument::as_mobius(double sparsity_eps) const {
  if (repr == Repr::Capacity) return mobius_transform(as_set_function(), sparsity_eps);
  MobiusRepresentation m;
  m.n = n;
  if (format == Format::Dense) {
    for (SubsetIndex a = 0; a < dense.size(); ++a) {
      if (std::abs(dense[a]) > sparsity_eps) m.coeffs.emplace(a, dense[a]);
    }
  } else {
    for (const auto& [a, v] : sparse) m.coeffs.emplace(a, v);
  }
  return m;
}

Act parse_act(const json& j) {
  if (!j.is_object() || !j.contains("values")) {
    throw DocumentError("act document needs a 'values' array", "$.values");
  }
  Act f = number_array(j["values"], "$.values");
  if (f.empty()) throw DocumentError("act must not be empty", "$.values");
  return f;
}

json act_to_json(const Act& f) { return json{{"values", f}}; }

WeightVector parse_weights(const json& j) {
  if (!j.is_object() || !j.contains("weights")) {
    throw DocumentError("weight document needs a 'weights' array", "$.weights");
  }
  WeightVector w(number_array(j["weights"], "$.weights"));
  try {
    w.validate();
  } catch (const std::invalid_argument& ex) {
    throw DocumentError(ex.what(), "$.weights");
  }
  return w;
}

json weights_to_json(const WeightVector& w) { return json{{"weights", w.w}}; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open file '" + path + "'", path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw DocumentError(std::string("JSON parse error: ") + ex.what(), path);
  }
}

}  // namespace choq
