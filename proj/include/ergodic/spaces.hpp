// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/measure_model.hpp"
#include "ergodic/rearrangement.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ergodic {

/// Orlicz function from the closed catalog Φ(u) = ((u - u₀)₊)^p, p >= 1.
/// u₀ = 0 gives the pure power u^p; p = 1 gives the hinge max(0, u - u₀).
class OrliczFunction {
 public:
  static OrliczFunction power(Rational p);
  static OrliczFunction shifted_power(Rational zero_threshold, Rational p);
  static OrliczFunction hinge(Rational zero_threshold);

  /// Φ(u) = 0 exactly for u <= u₀.
  const Rational& zero_threshold() const { return zero_threshold_; }
  const Rational& exponent() const { return exponent_; }

  double operator()(double u) const;
  std::string describe() const;

 private:
  OrliczFunction(Rational zero_threshold, Rational exponent);
  Rational zero_threshold_;
  Rational exponent_;
};

/// Concave Lorentz weight from the catalog φ(t) = t^γ (0 < γ <= 1) or φ(t) = min(t, c).
class LorentzWeight {
 public:
  static LorentzWeight power(Rational gamma);
  static LorentzWeight capped(Rational cap);

  /// φ(∞): infinite for powers, c for the capped weight.
  Extended limit_at_infinity() const;

  double operator()(double t) const;
  /// φ(t) when it is rational for every rational t (γ = 1 or capped).
  std::optional<Rational> exact(const Rational& t) const;
  std::string describe() const;

 private:
  enum class Kind { power, capped };
  LorentzWeight(Kind kind, Rational parameter);
  Kind kind_;
  Rational parameter_;
};

/// A norm value that is exact when the computation stayed rational.
struct NormValue {
  bool infinite = false;
  std::optional<Rational> exact;
  double approx = 0.0;

  static NormValue from(const Extended& e);
  static NormValue real(double value);
};

Extended norm_l1(const SpaceFunction& f);
Rational norm_linf(const SpaceFunction& f);
/// ∫_0^1 μ_t(f) dt.
Rational norm_l1_plus_linf(const SpaceFunction& f);
Extended norm_l1_cap_linf(const SpaceFunction& f);

struct LuxemburgResult {
  bool in_space = false;
  double norm = 0.0;
};

/// inf{a > 0 : ∫ Φ(|f|/a) dμ <= 1} by bracketing and bisection to relative tolerance.
LuxemburgResult luxemburg_norm(const SpaceFunction& f, const OrliczFunction& phi, double rel_tol = 1e-9);

/// ∫_0^∞ μ_t(f) dφ(t).
NormValue lorentz_norm(const SpaceFunction& f, const LorentzWeight& phi);

enum class SpaceKind { l1, linf, l1_cap_linf, l1_plus_linf, orlicz, lorentz };

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::l1_plus_linf;
  std::optional<OrliczFunction> orlicz;
  std::optional<LorentzWeight> lorentz;

  static SpaceDescriptor of(SpaceKind kind) { return {kind, std::nullopt, std::nullopt}; }
  static SpaceDescriptor of(OrliczFunction phi) { return {SpaceKind::orlicz, std::move(phi), std::nullopt}; }
  static SpaceDescriptor of(LorentzWeight phi) { return {SpaceKind::lorentz, std::nullopt, std::move(phi)}; }
};

/// Grammar: l1 | linf | l1cap | l1plus | orlicz:power:<p> | orlicz:shifted:<u0>:<p>
/// | orlicz:hinge:<u0> | lorentz:power:<gamma> | lorentz:min:<c>
SpaceDescriptor parse_space(std::string_view text);
std::string describe(const SpaceDescriptor& space);

/// Whether the constant function 𝟙 lies in the space on an infinite-measure model.
bool contains_one(const SpaceDescriptor& space);

/// Individual ergodic theorem property on a quasi-non-atomic infinite-measure model;
/// equivalent to 𝟙 ∉ E. Throws PreconditionError on finite-measure models.
bool has_iet(const SpaceDescriptor& space, const SpaceModel& model);

/// Catalog flag (declared, not computed): whether the norm is order continuous.
/// L¹, Orlicz powers and Lorentz powers are; the rest of the catalog is not.
bool declared_order_continuous(const SpaceDescriptor& space);

struct NormReport {
  NormValue norm;
  bool in_space = false;
  bool contains_one = false;
  bool has_iet = false;
};

NormReport norm_report(const SpaceFunction& f, const SpaceDescriptor& space, double rel_tol = 1e-9);

}  // namespace ergodic
