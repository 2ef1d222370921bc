// SPDX-License-Identifier: Apache-2.0
#include "ergodic/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ergodic {

OrliczFunction::OrliczFunction(Rational zero_threshold, Rational exponent)
    : zero_threshold_(std::move(zero_threshold)), exponent_(std::move(exponent)) {
  if (zero_threshold_ < 0) throw DomainError("Orlicz zero threshold must be nonnegative");
  if (exponent_ < 1) throw DomainError("Orlicz exponent must be at least 1 for convexity");
}

OrliczFunction OrliczFunction::power(Rational p) { return OrliczFunction(Rational(0), std::move(p)); }

OrliczFunction OrliczFunction::shifted_power(Rational zero_threshold, Rational p) {
  return OrliczFunction(std::move(zero_threshold), std::move(p));
}

OrliczFunction OrliczFunction::hinge(Rational zero_threshold) {
  return OrliczFunction(std::move(zero_threshold), Rational(1));
}

double OrliczFunction::operator()(double u) const {
  const double excess = u - to_double(zero_threshold_);
  if (excess <= 0) return 0.0;
  if (exponent_ == 1) return excess;
  return std::pow(excess, to_double(exponent_));
}

std::string OrliczFunction::describe() const {
  if (zero_threshold_ == 0) return "orlicz:power:" + to_string(exponent_);
  if (exponent_ == 1) return "orlicz:hinge:" + to_string(zero_threshold_);
  return "orlicz:shifted:" + to_string(zero_threshold_) + ":" + to_string(exponent_);
}

LorentzWeight::LorentzWeight(Kind kind, Rational parameter) : kind_(kind), parameter_(std::move(parameter)) {
  if (kind_ == Kind::power && (parameter_ <= 0 || parameter_ > 1))
    throw DomainError("Lorentz power weight needs 0 < gamma <= 1");
  if (kind_ == Kind::capped && parameter_ <= 0) throw DomainError("Lorentz cap must be positive");
}

LorentzWeight LorentzWeight::power(Rational gamma) { return LorentzWeight(Kind::power, std::move(gamma)); }
LorentzWeight LorentzWeight::capped(Rational cap) { return LorentzWeight(Kind::capped, std::move(cap)); }

Extended LorentzWeight::limit_at_infinity() const {
  return kind_ == Kind::power ? Extended::infinity() : Extended(parameter_);
}

double LorentzWeight::operator()(double t) const {
  if (kind_ == Kind::capped) return std::min(t, to_double(parameter_));
  if (parameter_ == 1) return t;
  return std::pow(t, to_double(parameter_));
}

std::optional<Rational> LorentzWeight::exact(const Rational& t) const {
  if (kind_ == Kind::capped) return std::min(t, parameter_);
  if (parameter_ == 1) return t;
  if (t == 0 || t == 1) return t;
  return std::nullopt;
}

std::string LorentzWeight::describe() const {
  return (kind_ == Kind::power ? "lorentz:power:" : "lorentz:min:") + to_string(parameter_);
}

NormValue NormValue::from(const Extended& e) {
  NormValue n;
  if (e.is_infinite()) {
    n.infinite = true;
    n.approx = std::numeric_limits<double>::infinity();
  } else {
    n.exact = e.value();
    n.approx = to_double(e.value());
  }
  return n;
}

NormValue NormValue::real(double value) {
  NormValue n;
  n.infinite = std::isinf(value);
  n.approx = value;
  return n;
}

// ---------------------------------------------------------------------------

Extended norm_l1(const SpaceFunction& f) {
  Extended sum = 0;
  for (const auto& vm : abs_distribution(f)) sum = sum + vm.measure * vm.value;
  return sum;
}

Rational norm_linf(const SpaceFunction& f) {
  auto dist = abs_distribution(f);
  return dist.empty() ? Rational(0) : dist.front().value;
}

Rational norm_l1_plus_linf(const SpaceFunction& f) { return rearrange(f).integral_to(Rational(1)); }

Extended norm_l1_cap_linf(const SpaceFunction& f) { return std::max(norm_l1(f), Extended(norm_linf(f))); }

LuxemburgResult luxemburg_norm(const SpaceFunction& f, const OrliczFunction& phi, double rel_tol) {
  if (!(rel_tol > 0)) throw DomainError("tolerance must be positive");
  const auto dist = abs_distribution(f);
  if (dist.empty()) return {true, 0.0};

  // Values carried on infinite measure must satisfy v/a <= u0, i.e. a >= v/u0.
  Rational a_min = 0;
  std::vector<std::pair<double, double>> finite_terms;
  for (const auto& vm : dist) {
    if (vm.measure.is_infinite()) {
      if (phi.zero_threshold() == 0) return {false, std::numeric_limits<double>::infinity()};
      a_min = std::max(a_min, Rational(vm.value / phi.zero_threshold()));
    } else {
      finite_terms.emplace_back(to_double(vm.value), to_double(vm.measure.value()));
    }
  }
  auto modular = [&](double a) {
    double sum = 0.0;
    for (const auto& [v, m] : finite_terms) sum += phi(v / a) * m;
    return sum;
  };

  const double lo_bound = to_double(a_min);
  if (lo_bound > 0 && modular(lo_bound) <= 1.0) return {true, lo_bound};

  double lo = lo_bound;
  double hi = std::max({lo_bound, to_double(dist.front().value), std::numeric_limits<double>::min()});
  while (modular(hi) > 1.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > rel_tol * hi * 0.5) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (modular(mid) <= 1.0 ? hi : lo) = mid;
  }
  return {true, hi};
}

NormValue lorentz_norm(const SpaceFunction& f, const LorentzWeight& phi) {
  const Rearrangement r = rearrange(f);
  Rational t_prev = 0;
  Rational exact_sum = 0;
  bool exact_ok = true;
  double approx = 0.0;
  for (const auto& step : r.steps()) {
    if (step.width.is_infinite()) {
      const Extended limit = phi.limit_at_infinity();
      if (limit.is_infinite()) return NormValue::from(Extended::infinity());
      const auto start = phi.exact(t_prev);
      approx += to_double(step.value) * (to_double(limit.value()) - phi(to_double(t_prev)));
      if (exact_ok && start) exact_sum += step.value * (limit.value() - *start);
      else exact_ok = false;
      break;
    }
    const Rational t_next = t_prev + step.width.value();
    approx += to_double(step.value) * (phi(to_double(t_next)) - phi(to_double(t_prev)));
    const auto a = phi.exact(t_prev);
    const auto b = phi.exact(t_next);
    if (exact_ok && a && b) exact_sum += step.value * (*b - *a);
    else exact_ok = false;
    t_prev = t_next;
  }
  if (exact_ok) return NormValue::from(Extended(exact_sum));
  return NormValue::real(approx);
}

// ---------------------------------------------------------------------------

SpaceDescriptor parse_space(std::string_view text) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);

  auto need = [&](std::size_t n) {
    if (fields.size() != n) throw ParseError("malformed space descriptor '" + std::string(text) + "'");
  };
  const std::string& head = fields[0];
  if (head == "l1") return need(1), SpaceDescriptor::of(SpaceKind::l1);
  if (head == "linf") return need(1), SpaceDescriptor::of(SpaceKind::linf);
  if (head == "l1cap") return need(1), SpaceDescriptor::of(SpaceKind::l1_cap_linf);
  if (head == "l1plus") return need(1), SpaceDescriptor::of(SpaceKind::l1_plus_linf);
  if (head == "orlicz" && fields.size() >= 2) {
    if (fields[1] == "power") return need(3), SpaceDescriptor::of(OrliczFunction::power(parse_rational(fields[2])));
    if (fields[1] == "hinge") return need(3), SpaceDescriptor::of(OrliczFunction::hinge(parse_rational(fields[2])));
    if (fields[1] == "shifted")
      return need(4), SpaceDescriptor::of(
                          OrliczFunction::shifted_power(parse_rational(fields[2]), parse_rational(fields[3])));
  }
  if (head == "lorentz" && fields.size() >= 2) {
    if (fields[1] == "power") return need(3), SpaceDescriptor::of(LorentzWeight::power(parse_rational(fields[2])));
    if (fields[1] == "min") return need(3), SpaceDescriptor::of(LorentzWeight::capped(parse_rational(fields[2])));
  }
  throw ParseError("unknown space descriptor '" + std::string(text) + "'");
}

std::string describe(const SpaceDescriptor& space) {
  switch (space.kind) {
    case SpaceKind::l1: return "l1";
    case SpaceKind::linf: return "linf";
    case SpaceKind::l1_cap_linf: return "l1cap";
    case SpaceKind::l1_plus_linf: return "l1plus";
    case SpaceKind::orlicz: return space.orlicz->describe();
    case SpaceKind::lorentz: return space.lorentz->describe();
  }
  return "?";
}

bool contains_one(const SpaceDescriptor& space) {
  switch (space.kind) {
    case SpaceKind::l1:
    case SpaceKind::l1_cap_linf: return false;
    case SpaceKind::linf:
    case SpaceKind::l1_plus_linf: return true;
    case SpaceKind::orlicz: return space.orlicz->zero_threshold() > 0;
    case SpaceKind::lorentz: return space.lorentz->limit_at_infinity().is_finite();
  }
  return false;
}

bool has_iet(const SpaceDescriptor& space, const SpaceModel& model) {
  if (!model.has_infinite_measure())
    throw PreconditionError("the IET criterion is stated for infinite-measure models");
  return !contains_one(space);
}

bool declared_order_continuous(const SpaceDescriptor& space) {
  switch (space.kind) {
    case SpaceKind::l1: return true;
    case SpaceKind::orlicz: return space.orlicz->zero_threshold() == 0;
    case SpaceKind::lorentz: return space.lorentz->limit_at_infinity().is_infinite();
    default: return false;
  }
}

NormReport norm_report(const SpaceFunction& f, const SpaceDescriptor& space, double rel_tol) {
  NormReport report;
  switch (space.kind) {
    case SpaceKind::l1: report.norm = NormValue::from(norm_l1(f)); break;
    case SpaceKind::linf: report.norm = NormValue::from(Extended(norm_linf(f))); break;
    case SpaceKind::l1_cap_linf: report.norm = NormValue::from(norm_l1_cap_linf(f)); break;
    case SpaceKind::l1_plus_linf: report.norm = NormValue::from(Extended(norm_l1_plus_linf(f))); break;
    case SpaceKind::orlicz: {
      auto lux = luxemburg_norm(f, *space.orlicz, rel_tol);
      report.norm = NormValue::real(lux.in_space ? lux.norm : std::numeric_limits<double>::infinity());
      break;
    }
    case SpaceKind::lorentz: report.norm = lorentz_norm(f, *space.lorentz); break;
  }
  report.in_space = !report.norm.infinite;
  if (f.space().has_infinite_measure()) {
    report.contains_one = contains_one(space);
    report.has_iet = has_iet(space, f.space());
  } else {
    // On a finite-measure model every catalog space contains 𝟙 and sits inside L¹ = R_μ.
    report.contains_one = true;
    report.has_iet = true;
  }
  return report;
}

}  // namespace ergodic
