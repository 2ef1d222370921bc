// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/measure_model.hpp"
#include "ergodic/rearrangement.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ergodic {

/// Location map τ on one infinite part.
struct LocationMap {
  enum class Kind { identity, successor, permutation };

  Kind kind = Kind::identity;
  /// successor: membership indicator of the index set G (nonzero = member).
  /// τ(m) is the next member of G after m for m ∈ G, and m otherwise.
  EvSeq members;
  /// permutation: a bijection of a finite index set onto itself.
  std::map<Index, Index> permutation;

  static LocationMap identity() { return {}; }
  static LocationMap successor(EvSeq members);
  static LocationMap permute(std::map<Index, Index> permutation);

  friend bool operator==(const LocationMap&, const LocationMap&) = default;
};

/// g ↦ φ · g∘τ restricted to one infinite part.
struct PartAction {
  EvSeq phi = EvSeq::constant(Rational(1));
  LocationMap tau;

  friend bool operator==(const PartAction&, const PartAction&) = default;
};

/// g ↦ φ · g∘π on the exceptional atoms. An empty phi means φ ≡ 1.
struct ExceptionalAction {
  std::vector<Rational> phi;
  std::map<Index, Index> permutation;

  friend bool operator==(const ExceptionalAction&, const ExceptionalAction&) = default;
};

class DSOperator;

struct MultiplierComposition {
  std::optional<PartAction> cells;
  std::optional<PartAction> atoms;
  std::optional<ExceptionalAction> exceptional;
};

/// Conditional expectation onto consecutive blocks of `block_size` cells or atoms;
/// every other location is its own block.
struct BlockExpectation {
  Part part = Part::atoms;
  Index block_size = 1;
};

/// g ↦ e · T(e g) for the part selector e.
struct Lift;
struct Compose;

/// Immutable Dunford–Schwartz operator built from a closed set of constructors.
/// Each constructor contracts both ‖·‖₁ and ‖·‖_∞ by construction.
class DSOperator {
 public:
  using Node = std::variant<MultiplierComposition, BlockExpectation, std::shared_ptr<const Lift>,
                            std::shared_ptr<const Compose>>;

  static DSOperator identity();
  /// Throws DomainError if some |φ| > 1 or τ is malformed.
  static DSOperator multiplier(MultiplierComposition m);
  /// Skips the |φ| <= 1 check; exists so tests can build non-contractive operators.
  static DSOperator multiplier_unchecked(MultiplierComposition m);
  static DSOperator block_expectation(Part part, Index block_size);
  static DSOperator lift(DSOperator inner, PartSet support);
  static DSOperator compose(DSOperator outer, DSOperator inner);

  const Node& node() const { return *node_; }

 private:
  explicit DSOperator(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
};

struct Lift {
  DSOperator inner;
  PartSet support;
};

struct Compose {
  DSOperator outer;
  DSOperator inner;
};

/// Block expectation on a model; the part must be cells or regular atoms present in the model.
DSOperator block_expectation(const SpaceModel& space, Index block_size, Part part);

/// T̃(g) = e T(e g): extends an operator acting on part(s) e to the whole model.
DSOperator lift(DSOperator inner, PartSet support);

SpaceFunction apply(const DSOperator& op, const SpaceFunction& f);

/// A_n(T, f) = (1/n) Σ_{k<n} T^k f, by iterated application.
SpaceFunction ergodic_average(const DSOperator& op, const SpaceFunction& f, Index n);

/// Linear functional g ↦ Σ c_loc g(loc) with finite support.
using PointFunctional = std::map<Location, Rational>;

/// ℓ ↦ ℓ ∘ T.
PointFunctional pull_back(const DSOperator& op, const PointFunctional& functional, const SpaceModel& space);
Rational evaluate(const PointFunctional& functional, const SpaceFunction& f);

/// A_n(T, f)(loc) for each n in `ns` (strictly increasing, >= 1), from one
/// running sum over the point functionals δ_loc ∘ T^k.
std::vector<Rational> averages_at(const DSOperator& op, const SpaceFunction& f, const Location& loc,
                                  const std::vector<Index>& ns);

struct DSViolation {
  std::size_t sample = 0;
  std::string check;
  std::string detail;
};

struct DSReport {
  std::size_t samples_checked = 0;
  std::vector<DSViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks ‖Tf‖₁ <= ‖f‖₁, ‖Tf‖_∞ <= ‖f‖_∞ and Tf ≺≺ f on every sample.
DSReport verify_ds(const DSOperator& op, const std::vector<SpaceFunction>& samples);

}  // namespace ergodic
