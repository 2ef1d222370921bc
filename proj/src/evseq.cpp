// SPDX-License-Identifier: Apache-2.0
#include "ergodic/evseq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ergodic {

EvSeq::EvSeq() : pattern_{Rational(0)} {}

EvSeq EvSeq::constant(const Rational& value) { return from_pattern({value}); }

EvSeq EvSeq::from_prefix_period(std::vector<Rational> prefix, std::vector<Rational> period) {
  if (period.empty()) throw DomainError("eventually periodic sequence needs a nonempty period");
  const std::size_t q = period.size();
  const std::size_t shift = prefix.size() % q;
  // aligned[r] holds the value at every n > |prefix| with (n-1) mod q == r.
  std::vector<Rational> aligned(q);
  for (std::size_t r = 0; r < q; ++r) aligned[r] = period[(r + q - shift) % q];
  std::map<Index, Rational> overrides;
  for (std::size_t i = 0; i < prefix.size(); ++i) overrides.emplace_hint(overrides.end(), i + 1, std::move(prefix[i]));
  return from_pattern(std::move(aligned), std::move(overrides));
}

EvSeq EvSeq::from_pattern(std::vector<Rational> pattern, std::map<Index, Rational> overrides) {
  if (pattern.empty()) throw DomainError("eventually periodic sequence needs a nonempty period");
  if (!overrides.empty() && overrides.begin()->first == 0) throw DomainError("sequence indices start at 1");
  EvSeq s;
  s.pattern_ = std::move(pattern);
  s.canonicalize(std::move(overrides));
  return s;
}

void EvSeq::canonicalize(std::map<Index, Rational> overrides) {
  const std::size_t q = pattern_.size();
  std::size_t best = q;
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool periodic = true;
    for (std::size_t r = d; r < q && periodic; ++r) periodic = pattern_[r] == pattern_[r - d];
    if (periodic) {
      best = d;
      break;
    }
  }
  pattern_.resize(best);
  exceptions_.clear();
  for (auto& [n, v] : overrides)
    if (v != pattern_[(n - 1) % best]) exceptions_.emplace_back(n, std::move(v));
}

const Rational& EvSeq::operator[](Index n) const {
  if (n == 0) throw DomainError("sequence indices start at 1");
  auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(), n,
                             [](const auto& e, Index key) { return e.first < key; });
  if (it != exceptions_.end() && it->first == n) return it->second;
  return pattern_[(n - 1) % pattern_.size()];
}

const Rational& EvSeq::pattern_value(Index n) const {
  if (n == 0) throw DomainError("sequence indices start at 1");
  return pattern_[(n - 1) % pattern_.size()];
}

std::pair<std::vector<Rational>, std::vector<Rational>> EvSeq::prefix_form() const {
  const Index len = last_exception();
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (Index n = 1; n <= len; ++n) prefix.push_back((*this)[n]);
  std::vector<Rational> period;
  period.reserve(pattern_.size());
  for (std::size_t r = 0; r < pattern_.size(); ++r) period.push_back(pattern_[(len + r) % pattern_.size()]);
  return {std::move(prefix), std::move(period)};
}

std::vector<Rational> EvSeq::recurring_values() const {
  std::set<Rational> values(pattern_.begin(), pattern_.end());
  return {values.begin(), values.end()};
}

bool EvSeq::is_eventually_zero() const {
  return std::all_of(pattern_.begin(), pattern_.end(), [](const Rational& v) { return v == 0; });
}

std::size_t EvSeq::combined_period(std::size_t p, std::size_t q) {
  const std::size_t g = std::gcd(p, q);
  const std::size_t l = p / g * q;
  if (l > kMaxPeriod || l / q != p / g)
    throw RepresentationError("combined period exceeds the representable limit");
  return l;
}

}  // namespace ergodic
