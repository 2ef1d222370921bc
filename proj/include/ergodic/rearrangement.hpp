// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/measure_model.hpp"

#include <vector>

namespace ergodic {

struct Step {
  Rational value;
  Extended width;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Non-increasing rearrangement t ↦ μ_t(f) as a right-continuous step function.
/// Steps carry strictly decreasing positive values; only the last one may have
/// infinite width. Past the last finite step the function is zero.
class Rearrangement {
 public:
  Rearrangement() = default;
  explicit Rearrangement(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }

  /// μ_t for t > 0. At a breakpoint the value of the following step is used.
  Rational at(const Rational& t) const;

  /// lim_{t→∞} μ_t: the value of an infinite step, else 0.
  Rational tail_value() const;

  /// Cumulative widths of the finite steps, ascending.
  std::vector<Rational> breakpoints() const;

  /// ∫_0^s μ_t dt.
  Rational integral_to(const Rational& s) const;

  friend bool operator==(const Rearrangement&, const Rearrangement&) = default;

 private:
  std::vector<Step> steps_;
};

Rearrangement rearrange(const SpaceFunction& f);

/// Evaluate μ_t; throws DomainError for t <= 0.
Rational mu_at(const Rearrangement& r, const Rational& t);

/// Hardy–Littlewood majorization g ≺≺ f: ∫_0^s μ(g) <= ∫_0^s μ(f) for all s > 0.
/// Both primitives are piecewise linear, so knots plus tail slopes decide it.
bool majorizes(const Rearrangement& f, const Rearrangement& g);
bool majorizes(const SpaceFunction& f, const SpaceFunction& g);

}  // namespace ergodic
