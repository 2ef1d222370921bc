// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/evseq.hpp"
#include "ergodic/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ergodic {

/// The three pieces of a quasi-non-atomic model: unit-measure cells G_1, G_2, ...
/// (the non-atomic part), regular atoms of one shared weight, and finitely many
/// exceptional atoms of arbitrary weight.
enum class Part : std::uint8_t { cells = 0, atoms = 1, exceptional = 2 };

inline constexpr Part kAllParts[] = {Part::cells, Part::atoms, Part::exceptional};

std::string_view part_name(Part part);
/// Accepts "cell", "cells", "atom", "atoms", "exceptional", "exc".
Part parse_part(std::string_view text);

struct Location {
  Part part = Part::cells;
  Index index = 1;

  friend auto operator<=>(const Location&, const Location&) = default;
};

/// "atom:3" style text.
Location parse_location(std::string_view text);
std::string to_string(const Location& loc);

/// Small bitset over parts.
class PartSet {
 public:
  constexpr PartSet() = default;
  constexpr explicit PartSet(Part part) : bits_(bit(part)) {}
  static constexpr PartSet all() { return PartSet(0b111u); }
  static constexpr PartSet atomic() { return PartSet(bit(Part::atoms) | bit(Part::exceptional)); }

  constexpr bool contains(Part part) const { return (bits_ & bit(part)) != 0; }
  constexpr PartSet with(Part part) const { return PartSet(bits_ | bit(part)); }
  constexpr PartSet complement() const { return PartSet(~bits_ & 0b111u); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(PartSet, PartSet) = default;

 private:
  constexpr explicit PartSet(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {}
  static constexpr unsigned bit(Part part) { return 1u << static_cast<unsigned>(part); }
  std::uint8_t bits_ = 0;
};

/// A σ-finite quasi-non-atomic measure space: either finitely many atoms
/// (the exceptional ones) or infinitely many atoms that share one weight.
class SpaceModel {
 public:
  SpaceModel(bool has_cells, std::optional<Rational> atom_weight,
             std::vector<Rational> exceptional_weights = {});

  bool has_cells() const { return has_cells_; }
  const std::optional<Rational>& atom_weight() const { return atom_weight_; }
  const std::vector<Rational>& exceptional_weights() const { return exceptional_; }

  bool has_part(Part part) const;
  /// Cells and regular atoms are countably infinite families.
  bool is_infinite_part(Part part) const { return part != Part::exceptional && has_part(part); }
  bool has_infinite_measure() const { return has_cells_ || atom_weight_.has_value(); }
  Extended total_measure() const;

  /// Weight of a single cell or atom. Throws DomainError for invalid locations.
  Rational weight(const Location& loc) const;
  void check_location(const Location& loc) const;

  friend bool operator==(const SpaceModel&, const SpaceModel&) = default;

 private:
  bool has_cells_;
  std::optional<Rational> atom_weight_;
  std::vector<Rational> exceptional_;
};

/// A bounded function, constant on each cell and atom.
class SpaceFunction {
 public:
  SpaceFunction(SpaceModel space, std::optional<EvSeq> cell_values, std::optional<EvSeq> atom_values,
                std::vector<Rational> exceptional_values = {});

  static SpaceFunction zero(const SpaceModel& space);
  static SpaceFunction constant(const SpaceModel& space, const Rational& value);
  /// Indicator of one cell/atom.
  static SpaceFunction indicator(const SpaceModel& space, const Location& loc);

  const SpaceModel& space() const { return space_; }
  /// Part sequences; throw DomainError if the model lacks the part.
  const EvSeq& cell_values() const;
  const EvSeq& atom_values() const;
  const std::vector<Rational>& exceptional_values() const { return exceptional_; }
  /// Sequence for cells or atoms.
  const EvSeq& sequence(Part part) const;

  Rational eval(const Location& loc) const;

  template <class F>
  SpaceFunction map(F&& fn) const {
    std::optional<EvSeq> cells, atoms;
    if (cells_) cells = cells_->map(fn);
    if (atoms_) atoms = atoms_->map(fn);
    std::vector<Rational> exc;
    exc.reserve(exceptional_.size());
    for (const auto& v : exceptional_) exc.push_back(fn(v));
    return SpaceFunction(space_, std::move(cells), std::move(atoms), std::move(exc));
  }

  template <class F>
  static SpaceFunction zip(const SpaceFunction& a, const SpaceFunction& b, F&& fn) {
    a.require_same_space(b);
    std::optional<EvSeq> cells, atoms;
    if (a.cells_) cells = EvSeq::zip(*a.cells_, *b.cells_, fn);
    if (a.atoms_) atoms = EvSeq::zip(*a.atoms_, *b.atoms_, fn);
    std::vector<Rational> exc;
    exc.reserve(a.exceptional_.size());
    for (std::size_t i = 0; i < a.exceptional_.size(); ++i) exc.push_back(fn(a.exceptional_[i], b.exceptional_[i]));
    return SpaceFunction(a.space_, std::move(cells), std::move(atoms), std::move(exc));
  }

  /// Keeps the listed parts, zeroes the others.
  SpaceFunction restricted_to(PartSet parts) const;
  /// Replaces one part's values (part must exist in the model).
  SpaceFunction with_sequence(Part part, EvSeq values) const;
  SpaceFunction with_exceptional(std::vector<Rational> values) const;

  void require_same_space(const SpaceFunction& other) const;

  friend bool operator==(const SpaceFunction&, const SpaceFunction&) = default;

 private:
  SpaceModel space_;
  std::optional<EvSeq> cells_;
  std::optional<EvSeq> atoms_;
  std::vector<Rational> exceptional_;
};

SpaceFunction operator+(const SpaceFunction& a, const SpaceFunction& b);
SpaceFunction operator-(const SpaceFunction& a, const SpaceFunction& b);
SpaceFunction operator*(const Rational& scale, const SpaceFunction& f);
SpaceFunction abs(const SpaceFunction& f);
SpaceFunction positive_part(const SpaceFunction& f);
SpaceFunction negative_part(const SpaceFunction& f);

/// μ{|f| > λ}, exact.
Extended level_measure(const SpaceFunction& f, const Rational& lambda);

/// Membership in R_μ: every positive level set has finite measure.
bool in_R_mu(const SpaceFunction& f);

/// (e f, (1 - e) f) with e the indicator of the non-atomic part.
std::pair<SpaceFunction, SpaceFunction> split_parts(const SpaceFunction& f);

/// One distinct positive |value| together with the measure of {|f| = value}.
struct ValueMass {
  Rational value;
  Extended measure;
};

/// Distribution of |f| over positive values, sorted by value descending.
std::vector<ValueMass> abs_distribution(const SpaceFunction& f);

/// Distinct positive |values| taken on sets of positive measure, ascending.
std::vector<Rational> distinct_abs_values(const SpaceFunction& f);

/// Signed integral ∫ f dμ; DomainError when f is not integrable.
Rational integral(const SpaceFunction& f);

}  // namespace ergodic
