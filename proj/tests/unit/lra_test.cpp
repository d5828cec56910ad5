#include "plqo/lra.hpp"

#include "../oracles/fourier_motzkin.hpp"
#include "../support/generators.hpp"

#include <gtest/gtest.h>

namespace plqo {
namespace {

LinExpr x(unsigned k, long c = 1) { return LinExpr::of(RcofVar::numeric(k), Rational(c)); }
LinExpr k(long c) { return LinExpr::constant_of(Rational(c)); }

TEST(Lra, StrictBoundsMeetAtAPoint) {
  ConstraintSet cs;
  cs.add(LinConstraint::compare(x(1), CmpOp::Lt, k(1)));
  cs.add(LinConstraint::compare(x(1), CmpOp::Gt, k(1)));
  EXPECT_FALSE(feasible(cs).feasible);
  ConstraintSet ok;
  ok.add(LinConstraint::compare(x(1), CmpOp::Lt, k(1)));
  ok.add(LinConstraint::compare(x(1), CmpOp::Gt, k(0)));
  const auto r = feasible(ok);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(ok.holds(r.witness));
}

TEST(Lra, StrictSumNeedsRoom) {
  ConstraintSet cs;
  LinExpr sum = x(1);
  sum += x(2);
  cs.add(LinConstraint::compare(sum, CmpOp::Eq, k(1)));
  cs.add(LinConstraint::compare(x(1), CmpOp::Gt, k(0)));
  cs.add(LinConstraint::compare(x(2), CmpOp::Gt, k(0)));
  const auto r = feasible(cs);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(cs.holds(r.witness));
  cs.add(LinConstraint::compare(x(1), CmpOp::Ge, k(1)));
  EXPECT_FALSE(feasible(cs).feasible);
}

TEST(Lra, GroundConstraints) {
  ConstraintSet cs;
  cs.add(LinConstraint::compare(k(0), CmpOp::Lt, k(0)));
  EXPECT_FALSE(feasible(cs).feasible);
  EXPECT_TRUE(feasible(ConstraintSet{}).feasible);
}

TEST(Lra, ImplicationAndNegation) {
  ConstraintSet premise;
  premise.add(LinConstraint::compare(x(1), CmpOp::Ge, k(2)));
  ConstraintSet conclusion;
  conclusion.add(LinConstraint::compare(x(1), CmpOp::Gt, k(1)));
  EXPECT_TRUE(implies(premise, conclusion));
  EXPECT_FALSE(implies(conclusion, premise));
  EXPECT_TRUE(check_implication(premise, negate(conclusion)));
}

TEST(Lra, NegationIsComplement) {
  testing::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing::random_system(rng, 2, 1);
    const LinConstraint& c = sys.constraints.constraints.front();
    Witness w;
    w[RcofVar::numeric(1)] = testing::random_rational(rng, -3, 3);
    w[RcofVar::numeric(2)] = testing::random_rational(rng, -3, 3);
    EXPECT_NE(c.holds(w), negate(c).holds(w)) << c.to_string();
  }
}

TEST(LraProperty, AgreesWithFourierMotzkin) {
  testing::Rng rng(52);
  int feasible_count = 0;
  for (int i = 0; i < 300; ++i) {
    const auto sys = testing::random_system(rng);
    const bool expected = oracle::fm_feasible(sys.rows, sys.nvars);
    const auto r = feasible(sys.constraints);
    ASSERT_EQ(r.feasible, expected) << sys.constraints.to_string();
    if (r.feasible) {
      ++feasible_count;
      EXPECT_TRUE(sys.constraints.holds(r.witness));
      EXPECT_TRUE(oracle::satisfies(sys.rows, testing::point_of(r.witness, sys.nvars)));
    }
  }
  EXPECT_GT(feasible_count, 0);
  EXPECT_LT(feasible_count, 300);
}

TEST(LraProperty, OracleAgreesWithKnownCases) {
  using oracle::Rel;
  // x < 1, x > 1.
  EXPECT_FALSE(oracle::fm_feasible({{{1}, Rel::Lt, 1}, {{-1}, Rel::Lt, -1}}, 1));
  // x <= 1, x >= 1.
  EXPECT_TRUE(oracle::fm_feasible({{{1}, Rel::Le, 1}, {{-1}, Rel::Le, -1}}, 1));
  // x + y = 1, x - y = 0, x < 1/2.
  EXPECT_FALSE(oracle::fm_feasible(
      {{{1, 1}, Rel::Eq, 1}, {{1, -1}, Rel::Eq, 0}, {{1, 0}, Rel::Lt, mpq_class(1, 2)}}, 2));
}

}  // namespace
}  // namespace plqo
