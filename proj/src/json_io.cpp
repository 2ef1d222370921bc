// SPDX-License-Identifier: Apache-2.0
#include "ergodic/json_io.hpp"

namespace ergodic::io {

namespace {

constexpr Index kDensePrefixLimit = 256;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& node, const char* key, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end() || it->is_null()) return nullptr;
  return &*it;
}

const Json& array_field(const Json& node, const char* key, const std::string& path) {
  const Json& arr = field(node, key, path);
  if (!arr.is_array()) fail(path + "." + key, "expected an array");
  return arr;
}

Index index_from_json(const Json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<std::int64_t>() < 1) fail(path, "expected a positive integer index");
  return node.get<Index>();
}

std::vector<Rational> rationals_from_json(const Json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational_to_json(v));
  return arr;
}

std::map<Index, Index> permutation_from_json(const Json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of [from, to] pairs");
  std::map<Index, Index> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) fail(p, "expected a [from, to] pair");
    if (!out.emplace(index_from_json(arr[i][0], p + "[0]"), index_from_json(arr[i][1], p + "[1]")).second)
      fail(p, "duplicate source index");
  }
  return out;
}

Json permutation_to_json(const std::map<Index, Index>& perm) {
  Json arr = Json::array();
  for (const auto& [from, to] : perm) arr.push_back(Json::array({from, to}));
  return arr;
}

Json part_action_to_json(const PartAction& action) {
  Json tau;
  switch (action.tau.kind) {
    case LocationMap::Kind::identity: tau = {{"kind", "identity"}}; break;
    case LocationMap::Kind::successor: tau = {{"kind", "successor"}, {"set", evseq_to_json(action.tau.members)}}; break;
    case LocationMap::Kind::permutation:
      tau = {{"kind", "permutation"}, {"map", permutation_to_json(action.tau.permutation)}};
      break;
  }
  return {{"phi", evseq_to_json(action.phi)}, {"tau", tau}};
}

PartAction part_action_from_json(const Json& node, const std::string& path) {
  PartAction action;
  if (const Json* phi = optional_field(node, "phi")) action.phi = evseq_from_json(*phi, path + ".phi");
  if (const Json* tau = optional_field(node, "tau")) {
    const std::string p = path + ".tau";
    const Json& kind = field(*tau, "kind", p);
    if (kind == "identity") {
      action.tau = LocationMap::identity();
    } else if (kind == "successor") {
      action.tau = LocationMap::successor(evseq_from_json(field(*tau, "set", p), p + ".set"));
    } else if (kind == "permutation") {
      action.tau = LocationMap::permute(permutation_from_json(field(*tau, "map", p), p + ".map"));
    } else {
      fail(p + ".kind", "unknown location map kind");
    }
  }
  return action;
}

PartSet parts_from_json(const Json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of part names");
  PartSet parts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a part name");
    try {
      parts = parts.with(parse_part(arr[i].get<std::string>()));
    } catch (const ParseError& e) {
      fail(path + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return parts;
}

Json parts_to_json(PartSet parts) {
  Json arr = Json::array();
  for (Part p : kAllParts)
    if (parts.contains(p)) arr.push_back(std::string(part_name(p)));
  return arr;
}

/// Re-throws model/domain errors from constructors as field diagnostics.
template <class F>
auto guarded(const std::string& path, F&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& node, const std::string& path) {
  if (node.is_number_integer()) return Rational(node.get<std::int64_t>());
  if (!node.is_string()) fail(path, "expected a rational as a \"p/q\" string");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Json evseq_to_json(const EvSeq& seq) {
  if (seq.last_exception() <= kDensePrefixLimit) {
    auto [prefix, period] = seq.prefix_form();
    return {{"prefix", rationals_to_json(prefix)}, {"period", rationals_to_json(period)}};
  }
  Json overrides = Json::array();
  for (const auto& [n, v] : seq.exceptions()) overrides.push_back(Json::array({n, rational_to_json(v)}));
  std::vector<Rational> pattern(seq.pattern().begin(), seq.pattern().end());
  return {{"prefix", Json::array()}, {"period", rationals_to_json(pattern)}, {"overrides", overrides}};
}

EvSeq evseq_from_json(const Json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object with prefix/period");
  std::vector<Rational> prefix;
  if (const Json* p = optional_field(node, "prefix")) prefix = rationals_from_json(*p, path + ".prefix");
  std::vector<Rational> period = rationals_from_json(field(node, "period", path), path + ".period");
  if (period.empty()) fail(path + ".period", "period must be nonempty");
  EvSeq seq = EvSeq::from_prefix_period(std::move(prefix), std::move(period));
  if (const Json* ov = optional_field(node, "overrides")) {
    if (!ov->is_array()) fail(path + ".overrides", "expected an array of [index, value] pairs");
    std::vector<Rational> pattern(seq.pattern().begin(), seq.pattern().end());
    std::map<Index, Rational> overrides;
    for (const auto& [n, v] : seq.exceptions()) overrides.emplace(n, v);
    for (std::size_t i = 0; i < ov->size(); ++i) {
      const std::string p = path + ".overrides[" + std::to_string(i) + "]";
      const Json& pair = (*ov)[i];
      if (!pair.is_array() || pair.size() != 2) fail(p, "expected an [index, value] pair");
      overrides[index_from_json(pair[0], p + "[0]")] = rational_from_json(pair[1], p + "[1]");
    }
    seq = EvSeq::from_pattern(std::move(pattern), std::move(overrides));
  }
  return seq;
}

Json model_to_json(const SpaceModel& space) {
  return {{"cells", space.has_cells()},
          {"atom_weight", space.atom_weight() ? rational_to_json(*space.atom_weight()) : Json(nullptr)},
          {"exceptional", rationals_to_json(space.exceptional_weights())}};
}

SpaceModel model_from_json(const Json& node, const std::string& path) {
  const Json& cells = field(node, "cells", path);
  if (!cells.is_boolean()) fail(path + ".cells", "expected true or false");
  std::optional<Rational> atom_weight;
  if (const Json* w = optional_field(node, "atom_weight")) atom_weight = rational_from_json(*w, path + ".atom_weight");
  std::vector<Rational> exceptional;
  if (const Json* e = optional_field(node, "exceptional")) exceptional = rationals_from_json(*e, path + ".exceptional");
  return guarded(path, [&] { return SpaceModel(cells.get<bool>(), atom_weight, exceptional); });
}

Json function_to_json(const SpaceFunction& f) {
  const SpaceModel& space = f.space();
  return {{"space", model_to_json(space)},
          {"cell_values", space.has_cells() ? evseq_to_json(f.cell_values()) : Json(nullptr)},
          {"atom_values", space.atom_weight() ? evseq_to_json(f.atom_values()) : Json(nullptr)},
          {"exceptional_values", rationals_to_json(f.exceptional_values())}};
}

SpaceFunction function_from_json(const Json& node) {
  if (!node.is_object()) fail("function", "expected a JSON object");
  SpaceModel space = model_from_json(field(node, "space", "function"), "space");
  std::optional<EvSeq> cells, atoms;
  if (const Json* c = optional_field(node, "cell_values")) cells = evseq_from_json(*c, "cell_values");
  if (const Json* a = optional_field(node, "atom_values")) atoms = evseq_from_json(*a, "atom_values");
  std::vector<Rational> exceptional;
  if (const Json* e = optional_field(node, "exceptional_values"))
    exceptional = rationals_from_json(*e, "exceptional_values");
  return guarded("function", [&] { return SpaceFunction(space, cells, atoms, exceptional); });
}

Json operator_to_json(const DSOperator& op) {
  struct Visitor {
    Json operator()(const MultiplierComposition& m) const {
      Json out = {{"kind", "multiplier"}};
      if (m.cells) out["cells"] = part_action_to_json(*m.cells);
      if (m.atoms) out["atoms"] = part_action_to_json(*m.atoms);
      if (m.exceptional)
        out["exceptional"] = {{"phi", rationals_to_json(m.exceptional->phi)},
                              {"permutation", permutation_to_json(m.exceptional->permutation)}};
      return out;
    }
    Json operator()(const BlockExpectation& e) const {
      return {{"kind", "block_expectation"}, {"part", std::string(part_name(e.part))}, {"block_size", e.block_size}};
    }
    Json operator()(const std::shared_ptr<const Lift>& l) const {
      return {{"kind", "lift"}, {"support", parts_to_json(l->support)}, {"inner", operator_to_json(l->inner)}};
    }
    Json operator()(const std::shared_ptr<const Compose>& c) const {
      return {{"kind", "compose"}, {"outer", operator_to_json(c->outer)}, {"inner", operator_to_json(c->inner)}};
    }
  };
  return std::visit(Visitor{}, op.node());
}

DSOperator operator_from_json(const Json& node, const std::string& path) {
  const Json& kind = field(node, "kind", path);
  if (kind == "identity") return DSOperator::identity();
  if (kind == "multiplier") {
    MultiplierComposition m;
    if (const Json* c = optional_field(node, "cells")) m.cells = part_action_from_json(*c, path + ".cells");
    if (const Json* a = optional_field(node, "atoms")) m.atoms = part_action_from_json(*a, path + ".atoms");
    if (const Json* e = optional_field(node, "exceptional")) {
      ExceptionalAction ex;
      if (const Json* phi = optional_field(*e, "phi")) ex.phi = rationals_from_json(*phi, path + ".exceptional.phi");
      if (const Json* perm = optional_field(*e, "permutation"))
        ex.permutation = permutation_from_json(*perm, path + ".exceptional.permutation");
      m.exceptional = std::move(ex);
    }
    return guarded(path, [&] { return DSOperator::multiplier(std::move(m)); });
  }
  if (kind == "block_expectation") {
    const Json& part = field(node, "part", path);
    if (!part.is_string()) fail(path + ".part", "expected a part name");
    const Index size = index_from_json(field(node, "block_size", path), path + ".block_size");
    return guarded(path, [&] { return DSOperator::block_expectation(parse_part(part.get<std::string>()), size); });
  }
  if (kind == "lift")
    return DSOperator::lift(operator_from_json(field(node, "inner", path), path + ".inner"),
                            parts_from_json(field(node, "support", path), path + ".support"));
  if (kind == "compose")
    return DSOperator::compose(operator_from_json(field(node, "outer", path), path + ".outer"),
                               operator_from_json(field(node, "inner", path), path + ".inner"));
  fail(path + ".kind", "unknown operator kind");
}

Json certificate_to_json(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f) {
  Json ns = Json::array();
  for (Index n : cert.ns) ns.push_back(n);
  Json trace = Json::array();
  for (const auto& v : cert.trace) trace.push_back(rational_to_json(v));
  return {{"a", rational_to_json(cert.band.a)},
          {"b", rational_to_json(cert.band.b)},
          {"sign", cert.band.sign},
          {"part", std::string(part_name(cert.band.part))},
          {"m1", cert.band.m1},
          {"threshold", rational_to_json(cert.threshold)},
          {"ns", ns},
          {"trace", trace},
          {"band_set", evseq_to_json(cert.band.members)},
          {"operator", operator_to_json(op)},
          {"function", function_to_json(f)}};
}

CertificateBundle certificate_from_json(const Json& node) {
  const std::string path = "certificate";
  if (!node.is_object()) fail(path, "expected a JSON object");
  OscillationCertificate cert;
  cert.band.a = rational_from_json(field(node, "a", path), "a");
  cert.band.b = rational_from_json(field(node, "b", path), "b");
  const Json& sign = field(node, "sign", path);
  if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) fail("sign", "expected 1 or -1");
  cert.band.sign = sign.get<int>();
  const Json& part = field(node, "part", path);
  if (!part.is_string()) fail("part", "expected a part name");
  cert.band.part = guarded("part", [&] { return parse_part(part.get<std::string>()); });
  cert.band.m1 = index_from_json(field(node, "m1", path), "m1");
  cert.threshold = rational_from_json(field(node, "threshold", path), "threshold");
  const Json& ns = array_field(node, "ns", path);
  for (std::size_t i = 0; i < ns.size(); ++i) cert.ns.push_back(index_from_json(ns[i], "ns[" + std::to_string(i) + "]"));
  cert.trace = rationals_from_json(array_field(node, "trace", path), "trace");
  if (const Json* set = optional_field(node, "band_set")) cert.band.members = evseq_from_json(*set, "band_set");
  DSOperator op = operator_from_json(field(node, "operator", path), "operator");
  SpaceFunction f = function_from_json(field(node, "function", path));
  return {std::move(cert), std::move(op), std::move(f)};
}

}  // namespace ergodic::io
