// SPDX-License-Identifier: Apache-2.0
#include "ergodic/json_io.hpp"

#include "../support/generators.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace ergodic;
using namespace ergodic::testing;
namespace io = ergodic::io;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    io::function_from_json(io::parse_json(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(JsonIo, FunctionRoundTrip) {
  gen::Source src(101);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceFunction f = src.function(6, src.coin(), 8);
    const std::string text = io::dump(io::function_to_json(f));
    const SpaceFunction back = io::function_from_json(io::parse_json(text));
    EXPECT_EQ(back, f);
    EXPECT_EQ(io::dump(io::function_to_json(back)), text);
  }
}

TEST(JsonIo, ReadsTheDocumentedLayout) {
  const SpaceFunction f = io::function_from_json(io::parse_json(R"({
    "space": {"cells": true, "atom_weight": "1/2", "exceptional": []},
    "cell_values": {"prefix": ["3", -1], "period": ["0"]},
    "atom_values": {"prefix": ["5/2"], "period": ["2", "0"]}
  })"));
  EXPECT_EQ(f.eval({Part::cells, 2}), q(-1));
  EXPECT_EQ(f.eval({Part::atoms, 1}), q(5, 2));
  EXPECT_EQ(f.eval({Part::atoms, 3}), q(0));
  EXPECT_EQ(f.eval({Part::atoms, 4}), q(2));
  EXPECT_EQ(*f.space().atom_weight(), q(1, 2));
}

TEST(JsonIo, FarOverridesUseSparseForm) {
  const EvSeq s = EvSeq::from_pattern(qs({1}), {{100000, q(-1)}});
  const io::Json node = io::evseq_to_json(s);
  EXPECT_TRUE(node.contains("overrides"));
  EXPECT_EQ(io::evseq_from_json(node, "seq"), s);
  const EvSeq near = seq(qs({1, 2}), qs({0}));
  EXPECT_FALSE(io::evseq_to_json(near).contains("overrides"));
}

TEST(JsonIo, ErrorsNameTheField) {
  EXPECT_NE(parse_error_of(R"({"space": {"cells": true}, "cell_values": {"prefix": [], "period": []}})").find("cell_values"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"space": {"cells": true}, "cell_values": {"prefix": ["x"], "period": [0]}})")
                .find("cell_values.prefix[0]"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"cell_values": {"prefix": [], "period": [0]}})").find("space"), std::string::npos);
  EXPECT_NE(parse_error_of("{\n  \"space\": \n}").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"space": {"cells": false, "atom_weight": "-1"}})").find("space"), std::string::npos);
}

TEST(JsonIo, OperatorRoundTrip) {
  MultiplierComposition m;
  m.atoms = PartAction{seq(qs({1, -1}), qs({1, 0})), LocationMap::successor(seq({}, qs({1, 0})))};
  m.cells = PartAction{EvSeq::constant(q(1)), LocationMap::permute({{1, 2}, {2, 1}})};
  const DSOperator op = DSOperator::compose(lift(DSOperator::multiplier(m), PartSet::all()),
                                            DSOperator::block_expectation(Part::cells, 3));
  const io::Json node = io::operator_to_json(op);
  const DSOperator back = io::operator_from_json(io::parse_json(io::dump(node)));
  EXPECT_EQ(io::operator_to_json(back), node);

  gen::Source src(103);
  for (int trial = 0; trial < 20; ++trial) {
    const SpaceFunction f = src.function(src.model(gen::ModelKind::cells_and_atoms), 5, src.coin());
    EXPECT_EQ(apply(back, f), apply(op, f));
  }
}

TEST(JsonIo, OperatorErrors) {
  EXPECT_THROW(io::operator_from_json(io::parse_json(R"({"kind": "rotation"})")), ParseError);
  EXPECT_THROW(io::operator_from_json(io::parse_json(R"({"kind": "block_expectation", "part": "atoms"})")), ParseError);
}

TEST(JsonIo, CertificateRoundTrip) {
  const SpaceFunction f = on_atoms(EvSeq::constant(q(1)));
  const Synthesis s = synthesize(f, 6);
  const std::string text = io::dump(io::certificate_to_json(s.certificate, s.op, f));
  const io::CertificateBundle bundle = io::certificate_from_json(io::parse_json(text));
  EXPECT_EQ(bundle.certificate.ns, s.certificate.ns);
  EXPECT_EQ(bundle.certificate.trace, s.certificate.trace);
  EXPECT_EQ(bundle.certificate.band, s.certificate.band);
  EXPECT_EQ(bundle.function, f);
  EXPECT_TRUE(verify_certificate(bundle.certificate, bundle.op, bundle.function));
  EXPECT_EQ(io::dump(io::certificate_to_json(bundle.certificate, bundle.op, bundle.function)), text);
}
