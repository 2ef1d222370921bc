// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergodic/counterexample.hpp"
#include "ergodic/measure_model.hpp"
#include "ergodic/operators.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ergodic::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; ParseError carries line/column on syntax errors.
Json parse_json(std::string_view text);
/// Two-space indented, trailing newline.
std::string dump(const Json& doc);

// Rationals travel as canonical "p/q" strings; integers are accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& node, const std::string& path);

/// {"prefix": [...], "period": [...]} or, for far-out exceptions,
/// {"prefix": [], "period": [...], "overrides": [[n, "v"], ...]}.
Json evseq_to_json(const EvSeq& seq);
EvSeq evseq_from_json(const Json& node, const std::string& path);

Json model_to_json(const SpaceModel& space);
SpaceModel model_from_json(const Json& node, const std::string& path);

Json function_to_json(const SpaceFunction& f);
SpaceFunction function_from_json(const Json& node);

Json operator_to_json(const DSOperator& op);
DSOperator operator_from_json(const Json& node, const std::string& path = "operator");

struct CertificateBundle {
  OscillationCertificate certificate;
  DSOperator op;
  SpaceFunction function;
};

Json certificate_to_json(const OscillationCertificate& cert, const DSOperator& op, const SpaceFunction& f);
CertificateBundle certificate_from_json(const Json& node);

}  // namespace ergodic::io
