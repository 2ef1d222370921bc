// SPDX-License-Identifier: Apache-2.0
#include "ergodic/counterexample.hpp"

#include <algorithm>

namespace ergodic {

namespace {

Rational signed_positive(const Rational& v, int sign) {
  const Rational s = sign > 0 ? v : Rational(-v);
  return s > 0 ? s : Rational(0);
}

Index first_member(const EvSeq& set) {
  for (Index m = 1;; ++m)
    if (set[m] != 0) return m;
}

}  // namespace

LevelBand find_level_band(const SpaceFunction& f, Part part, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (!f.space().is_infinite_part(part))
    throw PreconditionError("part " + std::string(part_name(part)) + " is not an infinite part of the model");
  const EvSeq& seq = f.sequence(part);

  std::vector<Rational> recurring;
  for (const auto& v : seq.pattern())
    if (auto p = signed_positive(v, sign); p > 0) recurring.push_back(p);
  if (recurring.empty())
    throw PreconditionError("the " + std::string(sign > 0 ? "positive" : "negative") + " part of f vanishes at infinity on " +
                            std::string(part_name(part)));

  LevelBand band;
  band.part = part;
  band.sign = sign;
  band.a = *std::min_element(recurring.begin(), recurring.end());
  band.b = *std::max_element(recurring.begin(), recurring.end());
  band.members = seq.map([&](const Rational& v) {
    const Rational p = signed_positive(v, sign);
    return Rational(p >= band.a && p <= band.b ? 1 : 0);
  });
  band.m1 = first_member(band.members);
  return band;
}

LevelBand find_level_band(const SpaceFunction& f) {
  if (in_R_mu(f)) throw PreconditionError("f belongs to R_mu; its ergodic averages converge for every DS operator");
  const int sign = in_R_mu(positive_part(f)) ? -1 : 1;
  const SpaceFunction& signed_f = sign > 0 ? positive_part(f) : negative_part(f);
  for (Part part : {Part::cells, Part::atoms}) {
    if (!f.space().is_infinite_part(part)) continue;
    if (!signed_f.sequence(part).is_eventually_zero()) return find_level_band(f, part, sign);
  }
  throw PreconditionError("no infinite part carries the tail of f");
}

std::vector<Index> greedy_ns(const SpaceFunction& f, const LevelBand& band, std::size_t depth) {
  if (depth < 2) throw DomainError("certificate depth must be at least 2");
  const EvSeq& seq = f.sequence(band.part);
  std::vector<Index> ns;
  ns.reserve(depth);
  Rational sum = 0;
  int term_sign = 1;
  Index point = band.m1;
  for (Index n = 1; ns.size() < depth; ++n) {
    if (n > 1) {
      do ++point;
      while (band.members[point] == 0);
    }
    sum += term_sign * signed_positive(seq[point], band.sign);
    // Odd picks need A_n > a/2, even picks A_n < -a/2; ties are rejected.
    const bool want_above = ns.size() % 2 == 0;
    const Rational scaled = 2 * sum;
    const Rational bound = band.a * n;
    if (want_above ? scaled > bound : scaled < -bound) {
      ns.push_back(n);
      term_sign = -term_sign;
    }
  }
  return ns;
}

PartAction build_tau_phi(const LevelBand& band, const std::vector<Index>& ns) {
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw DomainError("block boundaries must be strictly increasing");
  std::map<Index, Rational> boundaries;
  Index point = band.m1;
  Index position = 1;
  for (Index n : ns) {
    while (position < n) {
      do ++point;
      while (band.members[point] == 0);
      ++position;
    }
    boundaries.emplace(point, Rational(-1));
  }
  std::vector<Rational> pattern(band.members.pattern().begin(), band.members.pattern().end());
  std::map<Index, Rational> overrides;
  for (const auto& [n, v] : band.members.exceptions()) overrides.emplace(n, v);
  for (auto& [n, v] : boundaries) overrides[n] = v;

  PartAction action;
  action.phi = EvSeq::from_pattern(std::move(pattern), std::move(overrides));
  action.tau = LocationMap::successor(band.members);
  return action;
}

DSOperator counterexample_operator(const LevelBand& band, const std::vector<Index>& ns) {
  MultiplierComposition m;
  (band.part == Part::cells ? m.cells : m.atoms) = build_tau_phi(band, ns);
  return lift(DSOperator::multiplier(std::move(m)), PartSet(band.part));
}

Synthesis synthesize(const SpaceFunction& f, std::size_t depth) {
  LevelBand band = find_level_band(f);
  std::vector<Index> ns = greedy_ns(f, band, depth);
  DSOperator op = counterexample_operator(band, ns);

  OscillationCertificate cert;
  cert.threshold = band.a / 2;
  cert.band = std::move(band);
  cert.ns = std::move(ns);
  cert.trace = averages_at(op, f, cert.base_point(), cert.ns);

  auto check = check_certificate(cert, op, f);
  if (!check.verified) throw std::logic_error("synthesized certificate failed verification: " + check.diagnostic);
  return {std::move(op), std::move(cert)};
}

CertificateCheck check_certificate(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f) {
  CertificateCheck out;
  const auto& band = cert.band;
  if (band.a <= 0) return {false, "band level a must be positive", {}};
  if (cert.threshold != band.a / 2) return {false, "threshold must equal a/2", {}};
  if (cert.ns.size() < 2) return {false, "a certificate needs at least two indices", {}};
  if (cert.ns.size() != cert.trace.size()) return {false, "ns and trace lengths differ", {}};
  if (cert.ns.front() == 0) return {false, "indices start at 1", {}};
  for (std::size_t i = 1; i < cert.ns.size(); ++i)
    if (cert.ns[i] <= cert.ns[i - 1]) return {false, "ns must be strictly increasing", {}};

  try {
    out.recomputed = averages_at(op, f, cert.base_point(), cert.ns);
  } catch (const std::exception& e) {
    return {false, std::string("re-simulation failed: ") + e.what(), {}};
  }
  for (std::size_t i = 0; i < cert.ns.size(); ++i) {
    const Rational& value = out.recomputed[i];
    if (value != cert.trace[i]) {
      out.diagnostic = "trace mismatch at n=" + std::to_string(cert.ns[i]) + ": recorded " + to_string(cert.trace[i]) +
                       ", recomputed " + to_string(value);
      return out;
    }
    const Rational oriented = band.sign > 0 ? value : Rational(-value);
    const bool ok = i % 2 == 0 ? oriented > cert.threshold : oriented < -cert.threshold;
    if (!ok) {
      out.diagnostic = "A_" + std::to_string(cert.ns[i]) + " = " + to_string(value) + " does not cross " +
                       (i % 2 == 0 ? "+" : "-") + to_string(cert.threshold) + " strictly";
      return out;
    }
  }
  out.verified = true;
  return out;
}

bool verify_certificate(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f) {
  return check_certificate(cert, op, f).verified;
}

}  // namespace ergodic
