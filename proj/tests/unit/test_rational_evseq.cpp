// SPDX-License-Identifier: Apache-2.0
#include "ergodic/evseq.hpp"

#include "../support/generators.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace ergodic;
using ergodic::testing::q;
using ergodic::testing::qs;
using ergodic::testing::seq;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(parse_rational("0.25"), q(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), q(-3, 2));
  EXPECT_EQ(parse_rational(" 2/-4 "), q(-1, 2));
  EXPECT_EQ(to_string(q(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(q(4, 2)), "2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
  EXPECT_THROW(parse_rational("1."), ParseError);
}

TEST(Extended, OrdersInfinityLast) {
  EXPECT_LT(Extended(q(5)), Extended::infinity());
  EXPECT_EQ(Extended::infinity() + Extended(q(1)), Extended::infinity());
  EXPECT_EQ(Extended::infinity() * q(0), Extended(q(0)));
  EXPECT_EQ(to_string(Extended::infinity()), "inf");
  EXPECT_THROW(Extended::infinity().value(), DomainError);
}

TEST(EvSeq, IndexesPrefixThenPeriod) {
  const EvSeq s = seq(qs({3}), qs({0}));
  EXPECT_EQ(s[1], q(3));
  EXPECT_EQ(s[7], q(0));
  EXPECT_EQ(EvSeq::constant(q(1))[1000000], q(1));

  const EvSeq t = seq(qs({5, 6}), qs({1, 2, 3}));
  const std::vector<Rational> expected = qs({5, 6, 1, 2, 3, 1, 2, 3, 1});
  for (Index n = 1; n <= expected.size(); ++n) EXPECT_EQ(t[n], expected[n - 1]) << n;
  EXPECT_THROW(t[0], DomainError);
}

TEST(EvSeq, CanonicalFormIsUnique) {
  // Same sequence written three ways.
  const EvSeq a = seq(qs({1, 2}), qs({1, 2}));
  const EvSeq b = seq({}, qs({1, 2, 1, 2}));
  const EvSeq c = seq(qs({1}), qs({2, 1}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  EXPECT_EQ(a.period_length(), 2u);
  EXPECT_TRUE(a.exceptions().empty());

  const EvSeq d = seq(qs({0, 0, 4}), qs({0}));
  EXPECT_EQ(d.exceptions().size(), 1u);
  EXPECT_EQ(d.last_exception(), 3u);
  auto [prefix, period] = d.prefix_form();
  EXPECT_EQ(prefix, qs({0, 0, 4}));
  EXPECT_EQ(period, qs({0}));
}

TEST(EvSeq, EmptyPeriodIsRejected) { EXPECT_THROW(seq(qs({1}), {}), DomainError); }

TEST(EvSeq, PrefixFormRebuildsTheSameSequence) {
  gen::Source src(7);
  for (int trial = 0; trial < 200; ++trial) {
    const EvSeq s = src.sequence(src.palette(4), src.coin(), 8, 4);
    auto [prefix, period] = s.prefix_form();
    EXPECT_EQ(EvSeq::from_prefix_period(prefix, period), s);
  }
}

TEST(EvSeq, ZipAgreesPointwise) {
  gen::Source src(11);
  for (int trial = 0; trial < 100; ++trial) {
    const EvSeq a = src.sequence(src.palette(4), src.coin(), 6, 4);
    const EvSeq b = src.sequence(src.palette(4), src.coin(), 6, 3);
    const EvSeq sum = EvSeq::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
    for (Index n = 1; n <= 40; ++n) EXPECT_EQ(sum[n], a[n] + b[n]);
  }
}

TEST(EvSeq, OverridesFarOutStaySparse) {
  const EvSeq s = EvSeq::from_pattern(qs({1, 0}), {{1000001, q(-1)}});
  EXPECT_EQ(s[1000001], q(-1));
  EXPECT_EQ(s[1000003], q(1));
  EXPECT_EQ(s[1000002], q(0));
  EXPECT_EQ(s.exceptions().size(), 1u);
}
