// SPDX-License-Identifier: Apache-2.0
#include "ergodic/operators.hpp"

#include "ergodic/spaces.hpp"

#include <set>

namespace ergodic {

namespace {

bool member(const EvSeq& set, Index m) { return set[m] != 0; }
bool pattern_member(const EvSeq& set, Index m) { return set.pattern_value(m) != 0; }

Index next_member(const EvSeq& set, Index m) {
  for (Index x = m + 1;; ++x)
    if (member(set, x)) return x;
}

Index next_pattern_member(const EvSeq& set, Index m) {
  for (Index x = m + 1;; ++x)
    if (pattern_member(set, x)) return x;
}

std::optional<Index> prev_pattern_member(const EvSeq& set, Index x) {
  const Index q = set.period_length();
  for (Index y = x - 1; y >= 1 && y + q >= x; --y)
    if (pattern_member(set, y)) return y;
  return std::nullopt;
}

std::optional<Index> prev_member(const EvSeq& set, Index y) {
  for (Index z = y - 1; z >= 1; --z)
    if (member(set, z)) return z;
  return std::nullopt;
}

Index image(const LocationMap& tau, Index m) {
  switch (tau.kind) {
    case LocationMap::Kind::identity: return m;
    case LocationMap::Kind::successor: return member(tau.members, m) ? next_member(tau.members, m) : m;
    case LocationMap::Kind::permutation: {
      auto it = tau.permutation.find(m);
      return it == tau.permutation.end() ? m : it->second;
    }
  }
  return m;
}

Index pattern_image(const LocationMap& tau, Index m) {
  if (tau.kind == LocationMap::Kind::successor && pattern_member(tau.members, m))
    return next_pattern_member(tau.members, m);
  return m;
}

void check_permutation(const std::map<Index, Index>& perm) {
  std::set<Index> keys, values;
  for (const auto& [from, to] : perm) {
    if (from == 0 || to == 0) throw DomainError("permutation indices start at 1");
    keys.insert(from);
    values.insert(to);
  }
  if (keys != values || values.size() != perm.size())
    throw DomainError("location map must permute a finite index set onto itself");
}

void check_phi_bound(const EvSeq& phi) {
  for (const auto& v : phi.pattern())
    if (abs(v) > 1) throw DomainError("multiplier exceeds 1 in absolute value: " + to_string(v));
  for (const auto& [n, v] : phi.exceptions())
    if (abs(v) > 1) throw DomainError("multiplier exceeds 1 in absolute value at index " + std::to_string(n));
}

void check_structure(const MultiplierComposition& m, bool check_bounds) {
  for (const auto* action : {m.cells ? &*m.cells : nullptr, m.atoms ? &*m.atoms : nullptr}) {
    if (!action) continue;
    if (check_bounds) check_phi_bound(action->phi);
    const LocationMap& tau = action->tau;
    if (tau.kind == LocationMap::Kind::successor && tau.members.is_eventually_zero())
      throw DomainError("successor map needs an infinite index set");
    if (tau.kind == LocationMap::Kind::permutation) check_permutation(tau.permutation);
  }
  if (m.exceptional) {
    if (check_bounds)
      for (const auto& v : m.exceptional->phi)
        if (abs(v) > 1) throw DomainError("multiplier exceeds 1 in absolute value: " + to_string(v));
    check_permutation(m.exceptional->permutation);
  }
}

/// Builds an eventually periodic sequence from its periodic regime and the finite
/// set of indices where the actual value may deviate from it.
template <class PatternFn, class ActualFn>
EvSeq assemble(std::size_t period, PatternFn&& pattern_fn, const std::set<Index>& candidates, ActualFn&& actual_fn) {
  std::vector<Rational> pattern;
  pattern.reserve(period);
  for (Index m = 1; m <= period; ++m) pattern.push_back(pattern_fn(m));
  std::map<Index, Rational> overrides;
  for (Index m : candidates) overrides.emplace_hint(overrides.end(), m, actual_fn(m));
  return EvSeq::from_pattern(std::move(pattern), std::move(overrides));
}

EvSeq apply_part(const PartAction& action, const EvSeq& f) {
  const EvSeq& phi = action.phi;
  const LocationMap& tau = action.tau;
  std::set<Index> candidates;
  for (const auto& [n, v] : phi.exceptions()) candidates.insert(n);
  auto actual = [&](Index m) { return Rational(phi[m] * f[image(tau, m)]); };

  switch (tau.kind) {
    case LocationMap::Kind::identity:
      return EvSeq::zip(phi, f, [](const Rational& a, const Rational& b) { return Rational(a * b); });

    case LocationMap::Kind::permutation: {
      for (const auto& [n, v] : f.exceptions()) candidates.insert(n);
      for (const auto& [from, to] : tau.permutation) candidates.insert(from);
      const std::size_t period = EvSeq::combined_period(phi.period_length(), f.period_length());
      return assemble(
          period, [&](Index m) { return Rational(phi.pattern_value(m) * f.pattern_value(m)); }, candidates, actual);
    }

    case LocationMap::Kind::successor: {
      const EvSeq& set = tau.members;
      // Off the periodic regime: exceptions of φ, of G (and the G-predecessor whose
      // successor they change), and of f (and the member that maps onto them).
      for (const auto& [x, v] : set.exceptions()) {
        candidates.insert(x);
        if (auto p = prev_pattern_member(set, x)) candidates.insert(*p);
      }
      for (const auto& [y, v] : f.exceptions()) {
        candidates.insert(y);
        if (member(set, y))
          if (auto p = prev_member(set, y)) candidates.insert(*p);
      }
      const std::size_t period = EvSeq::combined_period(
          EvSeq::combined_period(phi.period_length(), f.period_length()), set.period_length());
      return assemble(
          period, [&](Index m) { return Rational(phi.pattern_value(m) * f.pattern_value(pattern_image(tau, m))); },
          candidates, actual);
    }
  }
  throw DomainError("unknown location map");
}

std::vector<Rational> apply_exceptional(const ExceptionalAction& action, const SpaceModel& space,
                                        const std::vector<Rational>& values) {
  const auto& weights = space.exceptional_weights();
  if (!action.phi.empty() && action.phi.size() != values.size())
    throw DomainError("exceptional multiplier length does not match the model");
  for (const auto& [from, to] : action.permutation) {
    if (from > values.size() || to > values.size()) throw DomainError("exceptional permutation leaves the model");
    if (weights[from - 1] != weights[to - 1])
      throw DomainError("exceptional permutation must preserve atom weights");
  }
  std::vector<Rational> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Index target = i + 1;
    if (auto it = action.permutation.find(target); it != action.permutation.end()) target = it->second;
    const Rational scale = action.phi.empty() ? Rational(1) : action.phi[i];
    out[i] = scale * values[target - 1];
  }
  return out;
}

Index block_start(Index m, Index b) { return (m - 1) / b * b + 1; }

EvSeq apply_block(Index b, const EvSeq& f) {
  std::set<Index> candidates;
  for (const auto& [y, v] : f.exceptions()) {
    const Index s = block_start(y, b);
    for (Index x = s; x < s + b; ++x) candidates.insert(x);
  }
  const std::size_t period = EvSeq::combined_period(static_cast<std::size_t>(b), f.period_length());
  auto average = [&](Index m, auto&& value) {
    const Index s = block_start(m, b);
    Rational sum = 0;
    for (Index x = s; x < s + b; ++x) sum += value(x);
    return Rational(sum / b);
  };
  return assemble(
      period, [&](Index m) { return average(m, [&](Index x) { return f.pattern_value(x); }); }, candidates,
      [&](Index m) { return average(m, [&](Index x) { return f[x]; }); });
}

SpaceFunction apply_multiplier(const MultiplierComposition& m, const SpaceFunction& f) {
  const SpaceModel& space = f.space();
  SpaceFunction out = f;
  if (m.cells) {
    if (!space.has_cells()) throw DomainError("operator acts on cells but the model has none");
    out = out.with_sequence(Part::cells, apply_part(*m.cells, f.cell_values()));
  }
  if (m.atoms) {
    if (!space.atom_weight()) throw DomainError("operator acts on regular atoms but the model has none");
    out = out.with_sequence(Part::atoms, apply_part(*m.atoms, f.atom_values()));
  }
  if (m.exceptional) out = out.with_exceptional(apply_exceptional(*m.exceptional, space, f.exceptional_values()));
  return out;
}

void check_block_part(const SpaceModel& space, Part part) {
  if (part == Part::exceptional) throw DomainError("block expectation needs equal-weight cells or atoms");
  if (!space.has_part(part)) throw DomainError("model has no " + std::string(part_name(part)));
}

}  // namespace

LocationMap LocationMap::successor(EvSeq members) {
  LocationMap m;
  m.kind = Kind::successor;
  m.members = std::move(members);
  return m;
}

LocationMap LocationMap::permute(std::map<Index, Index> permutation) {
  LocationMap m;
  m.kind = Kind::permutation;
  m.permutation = std::move(permutation);
  return m;
}

DSOperator DSOperator::identity() { return DSOperator(MultiplierComposition{}); }

DSOperator DSOperator::multiplier(MultiplierComposition m) {
  check_structure(m, true);
  return DSOperator(std::move(m));
}

DSOperator DSOperator::multiplier_unchecked(MultiplierComposition m) {
  check_structure(m, false);
  return DSOperator(std::move(m));
}

DSOperator DSOperator::block_expectation(Part part, Index block_size) {
  if (block_size == 0) throw DomainError("block size must be positive");
  if (part == Part::exceptional) throw DomainError("block expectation needs equal-weight cells or atoms");
  return DSOperator(BlockExpectation{part, block_size});
}

DSOperator DSOperator::lift(DSOperator inner, PartSet support) {
  return DSOperator(std::make_shared<const Lift>(Lift{std::move(inner), support}));
}

DSOperator DSOperator::compose(DSOperator outer, DSOperator inner) {
  return DSOperator(std::make_shared<const Compose>(Compose{std::move(outer), std::move(inner)}));
}

DSOperator block_expectation(const SpaceModel& space, Index block_size, Part part) {
  check_block_part(space, part);
  return DSOperator::block_expectation(part, block_size);
}

DSOperator lift(DSOperator inner, PartSet support) { return DSOperator::lift(std::move(inner), support); }

// ---------------------------------------------------------------------------

SpaceFunction apply(const DSOperator& op, const SpaceFunction& f) {
  struct Visitor {
    const SpaceFunction& f;
    SpaceFunction operator()(const MultiplierComposition& m) const { return apply_multiplier(m, f); }
    SpaceFunction operator()(const BlockExpectation& e) const {
      check_block_part(f.space(), e.part);
      return f.with_sequence(e.part, apply_block(e.block_size, f.sequence(e.part)));
    }
    SpaceFunction operator()(const std::shared_ptr<const Lift>& l) const {
      return apply(l->inner, f.restricted_to(l->support)).restricted_to(l->support);
    }
    SpaceFunction operator()(const std::shared_ptr<const Compose>& c) const {
      return apply(c->outer, apply(c->inner, f));
    }
  };
  return std::visit(Visitor{f}, op.node());
}

SpaceFunction ergodic_average(const DSOperator& op, const SpaceFunction& f, Index n) {
  if (n == 0) throw DomainError("ergodic averages need n >= 1");
  SpaceFunction power = f;
  SpaceFunction sum = f;
  for (Index k = 1; k < n; ++k) {
    power = apply(op, power);
    sum = sum + power;
  }
  return Rational(1, n) * sum;
}

// ---------------------------------------------------------------------------

namespace {

void accumulate(PointFunctional& out, const Location& loc, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = out.try_emplace(loc, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) out.erase(it);
  }
}

PointFunctional pull_back_multiplier(const MultiplierComposition& m, const PointFunctional& functional) {
  PointFunctional out;
  for (const auto& [loc, c] : functional) {
    const PartAction* action = nullptr;
    if (loc.part == Part::cells && m.cells) action = &*m.cells;
    if (loc.part == Part::atoms && m.atoms) action = &*m.atoms;
    if (action) {
      accumulate(out, {loc.part, image(action->tau, loc.index)}, c * action->phi[loc.index]);
    } else if (loc.part == Part::exceptional && m.exceptional) {
      const auto& ex = *m.exceptional;
      Index target = loc.index;
      if (auto it = ex.permutation.find(target); it != ex.permutation.end()) target = it->second;
      const Rational scale = ex.phi.empty() ? Rational(1) : ex.phi.at(loc.index - 1);
      accumulate(out, {loc.part, target}, c * scale);
    } else {
      accumulate(out, loc, c);
    }
  }
  return out;
}

PointFunctional restrict_functional(const PointFunctional& functional, PartSet support) {
  PointFunctional out;
  for (const auto& [loc, c] : functional)
    if (support.contains(loc.part)) out.emplace_hint(out.end(), loc, c);
  return out;
}

}  // namespace

PointFunctional pull_back(const DSOperator& op, const PointFunctional& functional, const SpaceModel& space) {
  for (const auto& [loc, c] : functional) space.check_location(loc);
  struct Visitor {
    const PointFunctional& functional;
    const SpaceModel& space;
    PointFunctional operator()(const MultiplierComposition& m) const {
      if (m.exceptional) {
        const std::vector<Rational> probe(space.exceptional_weights().size());
        apply_exceptional(*m.exceptional, space, probe);  // validates against the model
      }
      return pull_back_multiplier(m, functional);
    }
    PointFunctional operator()(const BlockExpectation& e) const {
      check_block_part(space, e.part);
      PointFunctional out;
      for (const auto& [loc, c] : functional) {
        if (loc.part != e.part) {
          accumulate(out, loc, c);
          continue;
        }
        const Index s = block_start(loc.index, e.block_size);
        const Rational share = c / e.block_size;
        for (Index x = s; x < s + e.block_size; ++x) accumulate(out, {loc.part, x}, share);
      }
      return out;
    }
    PointFunctional operator()(const std::shared_ptr<const Lift>& l) const {
      return restrict_functional(pull_back(l->inner, restrict_functional(functional, l->support), space),
                                 l->support);
    }
    PointFunctional operator()(const std::shared_ptr<const Compose>& c) const {
      return pull_back(c->inner, pull_back(c->outer, functional, space), space);
    }
  };
  return std::visit(Visitor{functional, space}, op.node());
}

Rational evaluate(const PointFunctional& functional, const SpaceFunction& f) {
  Rational sum = 0;
  for (const auto& [loc, c] : functional) sum += c * f.eval(loc);
  return sum;
}

std::vector<Rational> averages_at(const DSOperator& op, const SpaceFunction& f, const Location& loc,
                                  const std::vector<Index>& ns) {
  f.space().check_location(loc);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0) throw DomainError("ergodic averages need n >= 1");
    if (i > 0 && ns[i] <= ns[i - 1]) throw DomainError("trace indices must be strictly increasing");
  }
  std::vector<Rational> out;
  out.reserve(ns.size());
  PointFunctional functional{{loc, Rational(1)}};
  Rational running = 0;
  Index k = 0;
  for (Index n : ns) {
    while (k < n) {
      if (k > 0) functional = pull_back(op, functional, f.space());
      running += evaluate(functional, f);
      ++k;
    }
    out.push_back(running / n);
  }
  return out;
}

// ---------------------------------------------------------------------------

DSReport verify_ds(const DSOperator& op, const std::vector<SpaceFunction>& samples) {
  DSReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SpaceFunction& f = samples[i];
    const SpaceFunction image = apply(op, f);
    ++report.samples_checked;

    const Extended l1_in = norm_l1(f);
    const Extended l1_out = norm_l1(image);
    if (l1_in.is_finite() && l1_out > l1_in)
      report.violations.push_back({i, "l1", "||Tf||_1 = " + to_string(l1_out) + " > ||f||_1 = " + to_string(l1_in)});

    const Rational sup_in = norm_linf(f);
    const Rational sup_out = norm_linf(image);
    if (sup_out > sup_in)
      report.violations.push_back(
          {i, "linf", "||Tf||_inf = " + to_string(sup_out) + " > ||f||_inf = " + to_string(sup_in)});

    if (!majorizes(f, image)) report.violations.push_back({i, "majorization", "Tf is not majorized by f"});
  }
  return report;
}

}  // namespace ergodic
