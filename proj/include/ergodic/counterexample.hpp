// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/measure_model.hpp"
#include "ergodic/operators.hpp"

#include <string>
#include <vector>

namespace ergodic {

/// The band a <= sign·f <= b on an infinite index set G of one part.
///
/// `sign` records which of f₊ (+1) or f₋ (-1) carries the non-vanishing
/// rearrangement tail; G is stored as a membership indicator and m1 is its
/// first element.
struct LevelBand {
  Part part = Part::atoms;
  int sign = 1;
  Rational a;
  Rational b;
  EvSeq members;
  Index m1 = 1;

  friend bool operator==(const LevelBand&, const LevelBand&) = default;
};

/// Selects the sign and the part whose tail does not vanish (cells before atoms)
/// and returns the band on it. Throws PreconditionError when f ∈ R_μ.
LevelBand find_level_band(const SpaceFunction& f);

/// Band for a fixed part and sign. Throws PreconditionError if (sign·f)₊ vanishes
/// at infinity on that part.
LevelBand find_level_band(const SpaceFunction& f, Part part, int sign);

/// Greedy minimal n₁ < n₂ < ... < n_K with the signed running average along the
/// G-orbit of m1 alternately strictly above a/2 and strictly below -a/2.
std::vector<Index> greedy_ns(const SpaceFunction& f, const LevelBand& band, std::size_t depth);

/// φ = +1 on G except -1 at the block boundaries m_{n_k}, 0 off G; τ = successor along G.
PartAction build_tau_phi(const LevelBand& band, const std::vector<Index>& ns);

/// The lifted operator T̃(g) = e T(e g) with T = φ · g∘τ on the band's part.
DSOperator counterexample_operator(const LevelBand& band, const std::vector<Index>& ns);

struct OscillationCertificate {
  LevelBand band;
  Rational threshold;
  std::vector<Index> ns;
  std::vector<Rational> trace;

  Location base_point() const { return {band.part, band.m1}; }
};

struct Synthesis {
  DSOperator op;
  OscillationCertificate certificate;
};

/// Builds the operator and the divergence certificate of depth K >= 2.
/// Throws PreconditionError when f ∈ R_μ.
Synthesis synthesize(const SpaceFunction& f, std::size_t depth = 8);

struct CertificateCheck {
  bool verified = false;
  std::string diagnostic;
  std::vector<Rational> recomputed;
};

/// Recomputes the trace through the operator alone and checks exact equality
/// and strict alternation across ±a/2.
CertificateCheck check_certificate(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f);
bool verify_certificate(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f);

}  // namespace ergodic
