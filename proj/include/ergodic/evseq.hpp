// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ergodic {

using Index = std::uint64_t;

/// Eventually periodic sequence of rationals indexed from 1.
///
/// Stored as a periodic pattern aligned at index 1 (value(n) = period[(n-1) mod q])
/// plus a sparse, sorted list of exceptions. Every finite prefix/period pair has
/// exactly one canonical form: minimal period, exceptions only where the value
/// differs from the pattern. Equality is therefore structural.
class EvSeq {
 public:
  /// The zero sequence.
  EvSeq();

  static EvSeq constant(const Rational& value);

  /// value(n) = prefix[n-1] for n <= |prefix|, else period[(n-|prefix|-1) mod |period|].
  static EvSeq from_prefix_period(std::vector<Rational> prefix, std::vector<Rational> period);

  /// Pattern aligned at index 1; overrides replace individual entries.
  static EvSeq from_pattern(std::vector<Rational> pattern, std::map<Index, Rational> overrides = {});

  /// Throws DomainError for n == 0.
  const Rational& operator[](Index n) const;
  const Rational& pattern_value(Index n) const;

  std::span<const Rational> pattern() const { return pattern_; }
  std::size_t period_length() const { return pattern_.size(); }
  const std::vector<std::pair<Index, Rational>>& exceptions() const { return exceptions_; }
  /// Largest index carrying an exception (0 when the sequence is purely periodic).
  Index last_exception() const { return exceptions_.empty() ? 0 : exceptions_.back().first; }

  /// Classical (prefix, period) form: prefix runs up to the last exception.
  std::pair<std::vector<Rational>, std::vector<Rational>> prefix_form() const;

  /// Distinct values of the periodic pattern, ascending.
  std::vector<Rational> recurring_values() const;

  bool is_eventually_zero() const;

  template <class F>
  EvSeq map(F&& fn) const {
    std::vector<Rational> pattern;
    pattern.reserve(pattern_.size());
    for (const auto& v : pattern_) pattern.push_back(fn(v));
    std::map<Index, Rational> overrides;
    for (const auto& [n, v] : exceptions_) overrides.emplace_hint(overrides.end(), n, fn(v));
    return from_pattern(std::move(pattern), std::move(overrides));
  }

  template <class F>
  static EvSeq zip(const EvSeq& a, const EvSeq& b, F&& fn) {
    const std::size_t len = combined_period(a.period_length(), b.period_length());
    std::vector<Rational> pattern;
    pattern.reserve(len);
    for (std::size_t r = 0; r < len; ++r)
      pattern.push_back(fn(a.pattern_[r % a.pattern_.size()], b.pattern_[r % b.pattern_.size()]));
    std::map<Index, Rational> overrides;
    for (const auto& [n, v] : a.exceptions_) overrides.emplace(n, fn(v, b[n]));
    for (const auto& [n, v] : b.exceptions_)
      if (!overrides.contains(n)) overrides.emplace(n, fn(a[n], v));
    return from_pattern(std::move(pattern), std::move(overrides));
  }

  /// lcm of two period lengths; throws RepresentationError past kMaxPeriod.
  static std::size_t combined_period(std::size_t p, std::size_t q);

  static constexpr std::size_t kMaxPeriod = std::size_t{1} << 22;

  friend bool operator==(const EvSeq&, const EvSeq&) = default;

 private:
  void canonicalize(std::map<Index, Rational> overrides);

  std::vector<Rational> pattern_;
  std::vector<std::pair<Index, Rational>> exceptions_;
};

}  // namespace ergodic
