// SPDX-License-Identifier: Apache-2.0
#include "ergodic/spaces.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ergodic;
using namespace ergodic::testing;

namespace {

const SpaceFunction kThreeCells = on_cells(seq(qs({1, 1, 1}), qs({0})));
const SpaceFunction kTwoCells = on_cells(seq(qs({1, 1}), qs({0})));
const SpaceFunction kOneOnAtoms = on_atoms(EvSeq::constant(q(1)));
const SpaceFunction kHalfAtoms = on_atoms(seq(qs({3, 1}), qs({0})), q(1, 2));

double closed_form_lp(const SpaceFunction& f, int p) {
  double sum = 0;
  for (const auto& vm : abs_distribution(f)) sum += std::pow(to_double(vm.value), p) * to_double(vm.measure.value());
  return std::pow(sum, 1.0 / p);
}

}  // namespace

TEST(Norms, L1AndLinf) {
  EXPECT_TRUE(norm_l1(kOneOnAtoms).is_infinite());
  EXPECT_EQ(norm_linf(kOneOnAtoms), q(1));
  EXPECT_EQ(norm_l1(kThreeCells), Extended(q(3)));
  EXPECT_EQ(norm_l1(kHalfAtoms), Extended(q(2)));
}

TEST(Norms, L1PlusLinf) {
  EXPECT_EQ(norm_l1_plus_linf(kTwoCells), q(1));
  EXPECT_EQ(norm_l1_plus_linf(on_atoms(seq(qs({1}), qs({0})), q(1, 2))), q(1, 2));
  EXPECT_EQ(norm_l1_plus_linf(kOneOnAtoms), q(1));
}

TEST(Norms, L1CapLinf) {
  EXPECT_EQ(norm_l1_cap_linf(kThreeCells), Extended(q(3)));
  EXPECT_TRUE(norm_l1_cap_linf(kOneOnAtoms).is_infinite());
  EXPECT_EQ(norm_l1_cap_linf(kHalfAtoms), Extended(q(3)));
}

TEST(Norms, L1PlusLinfIsTheDecompositionInfimum) {
  gen::Source src(41);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceFunction f = src.function(6, src.coin());
    EXPECT_EQ(norm_l1_plus_linf(f), oracle::decomposition_infimum(f));
  }
}

TEST(Luxemburg, Examples) {
  const auto l1 = luxemburg_norm(kThreeCells, OrliczFunction::power(q(1)));
  EXPECT_TRUE(l1.in_space);
  EXPECT_NEAR(l1.norm, 3.0, 3e-9);
  const SpaceFunction two = on_atoms(seq(qs({2}), qs({0})));
  EXPECT_NEAR(luxemburg_norm(two, OrliczFunction::power(q(2))).norm, 2.0, 2e-9);
  const auto hinge = luxemburg_norm(kOneOnAtoms, OrliczFunction::hinge(q(1)));
  EXPECT_TRUE(hinge.in_space);
  EXPECT_NEAR(hinge.norm, 1.0, 1e-9);
}

TEST(Luxemburg, PowerWithoutThresholdExcludesNonRMu) {
  EXPECT_FALSE(luxemburg_norm(kOneOnAtoms, OrliczFunction::power(q(2))).in_space);
}

TEST(Luxemburg, MatchesClosedFormLp) {
  gen::Source src(43);
  for (int trial = 0; trial < 100; ++trial) {
    const SpaceFunction f = src.function(6, true);
    if (abs_distribution(f).empty()) continue;
    for (int p : {1, 2, 3}) {
      const double expected = closed_form_lp(f, p);
      const double got = luxemburg_norm(f, OrliczFunction::power(q(p))).norm;
      EXPECT_LE(std::abs(got - expected), 1e-9 * expected) << "p=" << p;
    }
  }
}

TEST(Luxemburg, MonotoneInTheFunction) {
  gen::Source src(47);
  const OrliczFunction phi = OrliczFunction::shifted_power(q(1, 2), q(2));
  for (int trial = 0; trial < 50; ++trial) {
    const SpaceFunction f = src.function(5, true);
    const SpaceFunction bigger = abs(f) + SpaceFunction::indicator(f.space(), f.space().has_cells()
                                                                                  ? Location{Part::cells, 1}
                                                                              : f.space().atom_weight()
                                                                                  ? Location{Part::atoms, 1}
                                                                                  : Location{Part::exceptional, 1});
    EXPECT_LE(luxemburg_norm(f, phi).norm, luxemburg_norm(bigger, phi).norm * (1 + 1e-9));
  }
}

TEST(Lorentz, Examples) {
  const NormValue identity = lorentz_norm(kTwoCells, LorentzWeight::power(q(1)));
  ASSERT_TRUE(identity.exact.has_value());
  EXPECT_EQ(*identity.exact, q(2));
  const NormValue capped = lorentz_norm(kOneOnAtoms, LorentzWeight::capped(q(1)));
  ASSERT_TRUE(capped.exact.has_value());
  EXPECT_EQ(*capped.exact, q(1));
  EXPECT_TRUE(lorentz_norm(kOneOnAtoms, LorentzWeight::power(q(1, 2))).infinite);
}

TEST(Lorentz, SquareRootWeightAgainstStieltjesSum) {
  const SpaceFunction f = on_atoms(seq(qs({3, 1}), qs({0})));
  const NormValue value = lorentz_norm(f, LorentzWeight::power(q(1, 2)));
  EXPECT_FALSE(value.exact.has_value());
  const double closed = 3.0 + (std::sqrt(2.0) - 1.0);
  EXPECT_NEAR(value.approx, closed, 1e-12);
  const Rearrangement r = rearrange(f);
  const double riemann = oracle::stieltjes(
      [&](double t) { return to_double(r.at(Rational(static_cast<long>(std::llround(t * 1e9)), 1000000000))); },
      [](double t) { return std::sqrt(t); }, 3.0, 300000);
  EXPECT_NEAR(value.approx, riemann, 1e-6);
}

TEST(Lorentz, IdentityWeightIsL1) {
  gen::Source src(53);
  for (int trial = 0; trial < 100; ++trial) {
    const SpaceFunction f = src.function(6, true);
    const NormValue value = lorentz_norm(f, LorentzWeight::power(q(1)));
    ASSERT_TRUE(value.exact.has_value());
    EXPECT_EQ(Extended(*value.exact), norm_l1(f));
  }
}

TEST(Catalog, ContainsOneAndIet) {
  const SpaceModel model = atoms_model();
  struct Row {
    const char* space;
    bool contains_one;
    bool iet;
  };
  const Row rows[] = {
      {"l1", false, true},
      {"linf", true, false},
      {"l1cap", false, true},
      {"l1plus", true, false},
      {"orlicz:power:2", false, true},
      {"orlicz:shifted:1:2", true, false},
      {"orlicz:hinge:1/2", true, false},
      {"lorentz:power:1/2", false, true},
      {"lorentz:power:1", false, true},
      {"lorentz:min:1", true, false},
  };
  for (const Row& row : rows) {
    const SpaceDescriptor d = parse_space(row.space);
    EXPECT_EQ(contains_one(d), row.contains_one) << row.space;
    EXPECT_EQ(has_iet(d, model), row.iet) << row.space;
  }
  EXPECT_THROW(has_iet(parse_space("l1"), SpaceModel(false, std::nullopt, {q(1)})), PreconditionError);
}

TEST(Catalog, DeclaredOrderContinuity) {
  EXPECT_TRUE(declared_order_continuous(parse_space("l1")));
  EXPECT_TRUE(declared_order_continuous(parse_space("orlicz:power:3")));
  EXPECT_FALSE(declared_order_continuous(parse_space("orlicz:hinge:1")));
  EXPECT_FALSE(declared_order_continuous(parse_space("linf")));
  EXPECT_FALSE(declared_order_continuous(parse_space("lorentz:min:2")));
}

TEST(Catalog, ParseSpaceRejectsBadDescriptors) {
  EXPECT_THROW(parse_space("l2"), ParseError);
  EXPECT_THROW(parse_space("orlicz:power"), ParseError);
  EXPECT_THROW(parse_space("orlicz:power:1/2"), DomainError);
  EXPECT_THROW(parse_space("lorentz:power:2"), DomainError);
  EXPECT_THROW(parse_space("lorentz:min:0"), DomainError);
  EXPECT_EQ(describe(parse_space("l1plus")), "l1plus");
}

TEST(NormReport, FiniteMeasureModelsContainOne) {
  const SpaceFunction f(SpaceModel(false, std::nullopt, {q(1), q(2)}), std::nullopt, std::nullopt, {q(1), q(1)});
  const NormReport report = norm_report(f, parse_space("l1"));
  EXPECT_TRUE(report.contains_one);
  ASSERT_TRUE(report.norm.exact.has_value());
  EXPECT_EQ(*report.norm.exact, q(3));
}
