// SPDX-License-Identifier: Apache-2.0
#include "ergodic/rearrangement.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace ergodic;
using namespace ergodic::testing;

namespace {

Rearrangement steps(std::initializer_list<std::pair<long, long>> list) {
  std::vector<Step> out;
  for (auto [v, w] : list) out.push_back({q(v), w < 0 ? Extended::infinity() : Extended(q(w))});
  return Rearrangement(out);
}

// ∫_0^s μ_t dt on a fine grid of the step function.
double dense_integral(const Rearrangement& r, double s) {
  const int cells = 4000;
  double total = 0;
  for (int i = 0; i < cells; ++i) {
    const double t = (i + 0.5) * s / cells;
    total += to_double(r.at(Rational(static_cast<long>(t * 1e6), 1000000))) * s / cells;
  }
  return total;
}

}  // namespace

TEST(Rearrange, Examples) {
  EXPECT_EQ(rearrange(on_cells(seq(qs({1, 1}), qs({0})))), steps({{1, 2}}));
  EXPECT_EQ(rearrange(on_atoms(EvSeq::constant(q(1)))), steps({{1, -1}}));
  EXPECT_EQ(rearrange(on_atoms(seq(qs({3, 1}), qs({0})))), steps({{3, 1}, {1, 1}}));
}

TEST(Rearrange, ExamplesMatchBruteForce) {
  const SpaceFunction f = on_atoms(seq(qs({3, 1}), qs({0})));
  const Rearrangement r = rearrange(f);
  for (const Rational& t : {q(1, 2), q(1), q(3, 2), q(2), q(3)}) EXPECT_EQ(r.at(t), oracle::brute_mu(f, t));
}

TEST(Rearrange, ZeroFunctionHasNoSteps) {
  EXPECT_TRUE(rearrange(SpaceFunction::zero(cells_model())).steps().empty());
  EXPECT_EQ(mu_at(rearrange(SpaceFunction::zero(cells_model())), q(1)), q(0));
}

TEST(Rearrangement, ValidatesSteps) {
  EXPECT_THROW(steps({{1, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(steps({{2, -1}, {1, 1}}), DomainError);
  EXPECT_THROW(steps({{0, 1}}), DomainError);
  EXPECT_THROW(steps({{1, 0}}), DomainError);
}

TEST(MuAt, Examples) {
  EXPECT_EQ(mu_at(steps({{1, 2}}), q(1)), q(1));
  EXPECT_EQ(mu_at(steps({{1, 2}}), q(2)), q(0));
  EXPECT_EQ(mu_at(steps({{3, 1}, {1, 1}}), q(3, 2)), q(1));
  EXPECT_THROW(mu_at(steps({{1, 2}}), q(0)), DomainError);
}

TEST(Majorizes, Examples) {
  const Rearrangement f = steps({{3, 1}, {1, 1}});
  EXPECT_TRUE(majorizes(f, f));
  EXPECT_TRUE(majorizes(steps({{1, 2}}), steps({{1, 1}})));
  EXPECT_TRUE(majorizes(f, steps({{2, 2}})));
  EXPECT_FALSE(majorizes(steps({{1, 1}}), steps({{1, 2}})));
  EXPECT_FALSE(majorizes(steps({{2, 2}}), steps({{1, -1}})));
  EXPECT_TRUE(majorizes(steps({{1, -1}}), steps({{1, 5}})));
}

TEST(Majorizes, AgreesWithDenseIntegration) {
  const Rearrangement f = steps({{3, 1}, {1, 1}});
  const Rearrangement g = steps({{2, 2}});
  for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) EXPECT_GE(dense_integral(f, s) + 1e-3, dense_integral(g, s));
  EXPECT_NEAR(dense_integral(f, 1.0), 3.0, 1e-3);
  EXPECT_NEAR(dense_integral(f, 2.0), 4.0, 1e-3);
  EXPECT_NEAR(dense_integral(g, 2.0), 4.0, 1e-3);
}

TEST(Majorizes, MatchesPrimitiveComparisonOnRandomPairs) {
  gen::Source src(17);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceModel space = src.model(gen::kAllModels[src.uniform(0, 4)]);
    const SpaceFunction f = src.function(space, 4, src.coin());
    const SpaceFunction g = src.function(space, 4, src.coin());
    const Rearrangement rf = rearrange(f), rg = rearrange(g);
    bool expected = true;
    for (int k = 1; k <= 80; ++k) expected &= rg.integral_to(Rational(k, 4)) <= rf.integral_to(Rational(k, 4));
    expected &= rg.tail_value() <= rf.tail_value();
    // A finite grid can only refute; confirm agreement whenever the grid refutes.
    if (!expected) EXPECT_FALSE(majorizes(f, g));
    if (majorizes(f, g)) EXPECT_TRUE(expected);
  }
}

TEST(Rearrange, Equimeasurable) {
  gen::Source src(21);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceFunction f = src.function(6, src.coin());
    const Rearrangement r = rearrange(f);
    for (const auto& lambda : oracle::value_grid(f)) {
      // |{t : μ_t > λ}| from the steps alone.
      Extended width = 0;
      for (const auto& s : r.steps())
        if (s.value > lambda) width = width + s.width;
      EXPECT_EQ(width, level_measure(f, lambda));
    }
  }
}

TEST(Rearrange, IdempotentOnCells) {
  gen::Source src(23);
  for (int trial = 0; trial < 100; ++trial) {
    const SpaceFunction f = src.function(cells_model(), 5, src.coin());
    const Rearrangement r = rearrange(f);
    std::vector<Rational> prefix;
    std::vector<Rational> period{q(0)};
    for (const auto& s : r.steps()) {
      if (s.width.is_infinite()) {
        period = {s.value};
        break;
      }
      for (Integer k = 0; k < numerator(s.width.value()); ++k) prefix.push_back(s.value);
    }
    EXPECT_EQ(rearrange(on_cells(seq(prefix, period))), r);
  }
}

TEST(Rearrange, SubadditiveIntegrals) {
  gen::Source src(29);
  for (int trial = 0; trial < 100; ++trial) {
    const SpaceModel space = src.model(gen::kAllModels[src.uniform(0, 4)]);
    const SpaceFunction f = src.function(space, 4, src.coin());
    const SpaceFunction g = src.function(space, 4, src.coin());
    const Rearrangement rf = rearrange(f), rg = rearrange(g), rs = rearrange(f + g);
    for (int k = 1; k <= 24; ++k) {
      const Rational s(k, 3);
      EXPECT_LE(rs.integral_to(s), rf.integral_to(s) + rg.integral_to(s));
    }
  }
}

TEST(Rearrange, TailVanishesExactlyInRMu) {
  gen::Source src(31);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceFunction f = src.function(4, src.coin());
    const Rearrangement r = rearrange(f);
    EXPECT_EQ(in_R_mu(f), r.tail_value() == 0);
    bool infinite_positive = false;
    for (const auto& s : r.steps()) infinite_positive |= s.width.is_infinite();
    EXPECT_EQ(in_R_mu(f), !infinite_positive);
  }
}

TEST(Rearrangement, IntegralTo) {
  const Rearrangement r = steps({{3, 1}, {1, 1}});
  EXPECT_EQ(r.integral_to(q(1, 2)), q(3, 2));
  EXPECT_EQ(r.integral_to(q(3, 2)), q(7, 2));
  EXPECT_EQ(r.integral_to(q(10)), q(4));
  EXPECT_EQ(steps({{2, 1}, {1, -1}}).integral_to(q(5)), q(6));
  EXPECT_EQ(r.breakpoints(), qs({1, 2}));
}
