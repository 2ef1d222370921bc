// SPDX-License-Identifier: Apache-2.0
#include "ergodic/measure_model.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace ergodic {

std::string_view part_name(Part part) {
  switch (part) {
    case Part::cells: return "cells";
    case Part::atoms: return "atoms";
    case Part::exceptional: return "exceptional";
  }
  return "?";
}

Part parse_part(std::string_view text) {
  if (text == "cell" || text == "cells") return Part::cells;
  if (text == "atom" || text == "atoms") return Part::atoms;
  if (text == "exceptional" || text == "exc") return Part::exceptional;
  throw ParseError("unknown part '" + std::string(text) + "'");
}

Location parse_location(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("location must look like part:index, got '" + std::string(text) + "'");
  Location loc;
  loc.part = parse_part(text.substr(0, colon));
  auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), loc.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || loc.index == 0)
    throw ParseError("location index must be a positive integer, got '" + std::string(digits) + "'");
  return loc;
}

std::string to_string(const Location& loc) {
  return std::string(part_name(loc.part)) + ":" + std::to_string(loc.index);
}

// ---------------------------------------------------------------------------

SpaceModel::SpaceModel(bool has_cells, std::optional<Rational> atom_weight, std::vector<Rational> exceptional_weights)
    : has_cells_(has_cells), atom_weight_(std::move(atom_weight)), exceptional_(std::move(exceptional_weights)) {
  if (atom_weight_ && *atom_weight_ <= 0) throw DomainError("atom weight must be positive");
  for (const auto& w : exceptional_)
    if (w <= 0) throw DomainError("exceptional atom weights must be positive");
  if (atom_weight_ && !exceptional_.empty())
    throw DomainError("model is not quasi-non-atomic: infinitely many atoms must share one weight");
}

bool SpaceModel::has_part(Part part) const {
  switch (part) {
    case Part::cells: return has_cells_;
    case Part::atoms: return atom_weight_.has_value();
    case Part::exceptional: return !exceptional_.empty();
  }
  return false;
}

Extended SpaceModel::total_measure() const {
  if (has_infinite_measure()) return Extended::infinity();
  Rational sum = 0;
  for (const auto& w : exceptional_) sum += w;
  return sum;
}

void SpaceModel::check_location(const Location& loc) const {
  if (loc.index == 0) throw DomainError("location indices start at 1");
  if (!has_part(loc.part)) throw DomainError("model has no " + std::string(part_name(loc.part)));
  if (loc.part == Part::exceptional && loc.index > exceptional_.size())
    throw DomainError("exceptional atom index " + std::to_string(loc.index) + " out of range");
}

Rational SpaceModel::weight(const Location& loc) const {
  check_location(loc);
  switch (loc.part) {
    case Part::cells: return Rational(1);
    case Part::atoms: return *atom_weight_;
    case Part::exceptional: return exceptional_[loc.index - 1];
  }
  return Rational(0);
}

// ---------------------------------------------------------------------------

SpaceFunction::SpaceFunction(SpaceModel space, std::optional<EvSeq> cell_values, std::optional<EvSeq> atom_values,
                             std::vector<Rational> exceptional_values)
    : space_(std::move(space)),
      cells_(std::move(cell_values)),
      atoms_(std::move(atom_values)),
      exceptional_(std::move(exceptional_values)) {
  if (cells_.has_value() != space_.has_cells())
    throw DomainError("cell values must be given exactly when the model has cells");
  if (atoms_.has_value() != space_.atom_weight().has_value())
    throw DomainError("atom values must be given exactly when the model has regular atoms");
  if (exceptional_.size() != space_.exceptional_weights().size())
    throw DomainError("one value per exceptional atom is required");
}

SpaceFunction SpaceFunction::zero(const SpaceModel& space) { return constant(space, Rational(0)); }

SpaceFunction SpaceFunction::constant(const SpaceModel& space, const Rational& value) {
  std::optional<EvSeq> cells, atoms;
  if (space.has_cells()) cells = EvSeq::constant(value);
  if (space.atom_weight()) atoms = EvSeq::constant(value);
  return SpaceFunction(space, std::move(cells), std::move(atoms),
                       std::vector<Rational>(space.exceptional_weights().size(), value));
}

SpaceFunction SpaceFunction::indicator(const SpaceModel& space, const Location& loc) {
  space.check_location(loc);
  SpaceFunction f = zero(space);
  if (loc.part == Part::exceptional) {
    f.exceptional_[loc.index - 1] = 1;
  } else {
    auto seq = EvSeq::from_pattern({Rational(0)}, {{loc.index, Rational(1)}});
    (loc.part == Part::cells ? f.cells_ : f.atoms_) = std::move(seq);
  }
  return f;
}

const EvSeq& SpaceFunction::cell_values() const {
  if (!cells_) throw DomainError("model has no cells");
  return *cells_;
}

const EvSeq& SpaceFunction::atom_values() const {
  if (!atoms_) throw DomainError("model has no regular atoms");
  return *atoms_;
}

const EvSeq& SpaceFunction::sequence(Part part) const {
  if (part == Part::cells) return cell_values();
  if (part == Part::atoms) return atom_values();
  throw DomainError("exceptional atoms are a finite list, not a sequence");
}

Rational SpaceFunction::eval(const Location& loc) const {
  space_.check_location(loc);
  if (loc.part == Part::exceptional) return exceptional_[loc.index - 1];
  return sequence(loc.part)[loc.index];
}

SpaceFunction SpaceFunction::restricted_to(PartSet parts) const {
  SpaceFunction out = *this;
  if (out.cells_ && !parts.contains(Part::cells)) out.cells_ = EvSeq();
  if (out.atoms_ && !parts.contains(Part::atoms)) out.atoms_ = EvSeq();
  if (!parts.contains(Part::exceptional)) std::fill(out.exceptional_.begin(), out.exceptional_.end(), Rational(0));
  return out;
}

SpaceFunction SpaceFunction::with_sequence(Part part, EvSeq values) const {
  SpaceFunction out = *this;
  if (part == Part::cells && out.cells_) out.cells_ = std::move(values);
  else if (part == Part::atoms && out.atoms_) out.atoms_ = std::move(values);
  else throw DomainError("model has no " + std::string(part_name(part)) + " sequence");
  return out;
}

SpaceFunction SpaceFunction::with_exceptional(std::vector<Rational> values) const {
  if (values.size() != exceptional_.size()) throw DomainError("one value per exceptional atom is required");
  SpaceFunction out = *this;
  out.exceptional_ = std::move(values);
  return out;
}

void SpaceFunction::require_same_space(const SpaceFunction& other) const {
  if (!(space_ == other.space_)) throw DomainError("functions live on different measure models");
}

SpaceFunction operator+(const SpaceFunction& a, const SpaceFunction& b) {
  return SpaceFunction::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

SpaceFunction operator-(const SpaceFunction& a, const SpaceFunction& b) {
  return SpaceFunction::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

SpaceFunction operator*(const Rational& scale, const SpaceFunction& f) {
  return f.map([&](const Rational& x) { return Rational(scale * x); });
}

SpaceFunction abs(const SpaceFunction& f) {
  return f.map([](const Rational& x) { return abs(x); });
}

SpaceFunction positive_part(const SpaceFunction& f) {
  return f.map([](const Rational& x) { return x > 0 ? x : Rational(0); });
}

SpaceFunction negative_part(const SpaceFunction& f) {
  return f.map([](const Rational& x) { return x < 0 ? Rational(-x) : Rational(0); });
}

// ---------------------------------------------------------------------------

namespace {

Rational part_weight(const SpaceModel& space, Part part) {
  return part == Part::cells ? Rational(1) : *space.atom_weight();
}

}  // namespace

Extended level_measure(const SpaceFunction& f, const Rational& lambda) {
  if (lambda < 0) throw DomainError("level must be nonnegative");
  const SpaceModel& space = f.space();
  Extended total = 0;
  for (Part part : {Part::cells, Part::atoms}) {
    if (!space.is_infinite_part(part)) continue;
    const EvSeq& seq = f.sequence(part);
    for (const auto& v : seq.pattern())
      if (abs(v) > lambda) return Extended::infinity();
    Rational count = 0;
    for (const auto& [n, v] : seq.exceptions())
      if (abs(v) > lambda) count += 1;
    total = total + Extended(count * part_weight(space, part));
  }
  const auto& weights = space.exceptional_weights();
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (abs(f.exceptional_values()[i]) > lambda) total = total + Extended(weights[i]);
  return total;
}

bool in_R_mu(const SpaceFunction& f) {
  for (Part part : {Part::cells, Part::atoms})
    if (f.space().is_infinite_part(part) && !f.sequence(part).is_eventually_zero()) return false;
  return true;
}

std::pair<SpaceFunction, SpaceFunction> split_parts(const SpaceFunction& f) {
  return {f.restricted_to(PartSet(Part::cells)), f.restricted_to(PartSet::atomic())};
}

std::vector<ValueMass> abs_distribution(const SpaceFunction& f) {
  std::map<Rational, Extended, std::greater<>> mass;
  auto add = [&](const Rational& v, const Extended& m) {
    Rational a = abs(v);
    if (a == 0) return;
    auto [it, inserted] = mass.try_emplace(a, m);
    if (!inserted) it->second = it->second + m;
  };
  const SpaceModel& space = f.space();
  for (Part part : {Part::cells, Part::atoms}) {
    if (!space.is_infinite_part(part)) continue;
    const EvSeq& seq = f.sequence(part);
    const Rational w = part_weight(space, part);
    for (const auto& v : seq.recurring_values()) add(v, Extended::infinity());
    for (const auto& [n, v] : seq.exceptions()) add(v, w);
  }
  for (std::size_t i = 0; i < space.exceptional_weights().size(); ++i)
    add(f.exceptional_values()[i], space.exceptional_weights()[i]);

  std::vector<ValueMass> out;
  out.reserve(mass.size());
  for (auto& [v, m] : mass) out.push_back({v, m});
  return out;
}

std::vector<Rational> distinct_abs_values(const SpaceFunction& f) {
  std::vector<Rational> out;
  for (const auto& vm : abs_distribution(f)) out.push_back(vm.value);
  std::reverse(out.begin(), out.end());
  return out;
}

Rational integral(const SpaceFunction& f) {
  if (!in_R_mu(f)) throw DomainError("function is not integrable");
  const SpaceModel& space = f.space();
  Rational sum = 0;
  for (Part part : {Part::cells, Part::atoms}) {
    if (!space.is_infinite_part(part)) continue;
    const Rational w = part_weight(space, part);
    for (const auto& [n, v] : f.sequence(part).exceptions()) sum += v * w;
  }
  for (std::size_t i = 0; i < space.exceptional_weights().size(); ++i)
    sum += f.exceptional_values()[i] * space.exceptional_weights()[i];
  return sum;
}

}  // namespace ergodic
