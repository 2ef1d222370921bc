// SPDX-License-Identifier: Apache-2.0
#include "ergodic/rearrangement.hpp"

#include <algorithm>
#include <set>

namespace ergodic {

Rearrangement::Rearrangement(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].value <= 0) throw DomainError("rearrangement steps must have positive values");
    if (steps_[i].width <= Extended(0)) throw DomainError("rearrangement steps must have positive width");
    if (i > 0 && steps_[i].value >= steps_[i - 1].value)
      throw DomainError("rearrangement values must strictly decrease");
    if (steps_[i].width.is_infinite() && i + 1 != steps_.size())
      throw DomainError("only the last rearrangement step may be infinite");
  }
}

Rational Rearrangement::at(const Rational& t) const {
  if (t <= 0) throw DomainError("μ_t is defined for t > 0");
  Rational edge = 0;
  for (const auto& step : steps_) {
    if (step.width.is_infinite()) return step.value;
    edge += step.width.value();
    if (t < edge) return step.value;
  }
  return Rational(0);
}

Rational Rearrangement::tail_value() const {
  if (!steps_.empty() && steps_.back().width.is_infinite()) return steps_.back().value;
  return Rational(0);
}

std::vector<Rational> Rearrangement::breakpoints() const {
  std::vector<Rational> out;
  Rational edge = 0;
  for (const auto& step : steps_) {
    if (step.width.is_infinite()) break;
    edge += step.width.value();
    out.push_back(edge);
  }
  return out;
}

Rational Rearrangement::integral_to(const Rational& s) const {
  Rational remaining = s;
  Rational sum = 0;
  for (const auto& step : steps_) {
    if (remaining <= 0) break;
    Rational span = step.width.is_infinite() ? remaining : std::min(remaining, step.width.value());
    sum += step.value * span;
    remaining -= span;
  }
  return sum;
}

Rearrangement rearrange(const SpaceFunction& f) {
  std::vector<Step> steps;
  for (auto& vm : abs_distribution(f)) {
    const bool infinite = vm.measure.is_infinite();
    steps.push_back({std::move(vm.value), std::move(vm.measure)});
    if (infinite) break;
  }
  return Rearrangement(std::move(steps));
}

Rational mu_at(const Rearrangement& r, const Rational& t) { return r.at(t); }

bool majorizes(const Rearrangement& f, const Rearrangement& g) {
  std::set<Rational> knots;
  for (auto& b : f.breakpoints()) knots.insert(b);
  for (auto& b : g.breakpoints()) knots.insert(b);
  for (const auto& s : knots)
    if (g.integral_to(s) > f.integral_to(s)) return false;
  // Beyond the last knot both primitives are affine with slope equal to the tail value.
  return g.tail_value() <= f.tail_value();
}

bool majorizes(const SpaceFunction& f, const SpaceFunction& g) { return majorizes(rearrange(f), rearrange(g)); }

}  // namespace ergodic
