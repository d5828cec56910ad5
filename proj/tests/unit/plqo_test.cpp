#include "plqo/errors.hpp"
#include "plqo/plqo.hpp"
#include "plqo/syntax.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace plqo {
namespace {

// Skeleton evaluation with atoms looked up by structural equality.
bool skeleton(const PlqoFormula& f, const std::vector<PlqoFormula>& as,
              const std::vector<bool>& vals) {
  using K = PlqoFormula::Kind;
  switch (f.kind()) {
    case K::Obs:
    case K::Prob: {
      const auto it = std::find(as.begin(), as.end(), f);
      return vals.at(static_cast<std::size_t>(it - as.begin()));
    }
    case K::Neg: return !skeleton(f.child(), as, vals);
    case K::Impl: return !skeleton(f.left(), as, vals) || skeleton(f.right(), as, vals);
  }
  return false;
}

TEST(Plqo, LinearizeCollectsCoefficients) {
  const LinearTerm t = linearize(parse_term("2 * x1 + 1/2 - x2 + x1"));
  EXPECT_EQ(t.constant, make_rational(1, 2));
  EXPECT_EQ(t.coeffs.at(1), 3);
  EXPECT_EQ(t.coeffs.at(2), -1);
}

TEST(Plqo, LinearizeRejectsProducts) {
  try {
    (void)linearize(parse_term("x1 * x2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedNonlinear);
  }
}

TEST(Plqo, EvalTermExact) {
  Assignment rho;
  rho.numeric[1] = make_rational(2, 3);
  EXPECT_EQ(eval_term(parse_term("x1 * x1 - 1/9"), rho), make_rational(1, 3));
  EXPECT_EQ(eval_term(parse_term("x2"), rho), 0);
}

TEST(Plqo, AtomsInFirstOccurrenceOrder) {
  const PlqoFormula f = parse_plqo("O(B1) -> (P(B2) < 1/2 | O(B1))");
  const auto as = atoms(f);
  ASSERT_EQ(as.size(), 2U);
  EXPECT_EQ(as[0], parse_plqo("O(B1)"));
}

TEST(Plqo, BPhiAndProbFormulas) {
  const PlqoFormula f = parse_plqo("O(B3) & P(B1 -> B2) >= 1/3");
  EXPECT_EQ(b_phi(f), (SymbolSet{PropSymbol{1}, PropSymbol{2}, PropSymbol{3}}));
  ASSERT_EQ(prob_formulas(f).size(), 1U);
  EXPECT_EQ(prob_formulas(f)[0], parse_prop("B1 -> B2"));
}

TEST(Plqo, SkeletonTautology) {
  EXPECT_TRUE(is_skeleton_tautology(parse_plqo("O(B1) | !O(B1)")));
  EXPECT_FALSE(is_skeleton_tautology(parse_plqo("O(B1) | O(!B1)")));
}

TEST(PlqoProperty, DnfIsEquivalentToFormula) {
  testing::Rng rng(31);
  testing::PlqoGenOptions o;
  o.symbols = 2;
  o.prop_depth = 1;
  for (int i = 0; i < 300; ++i) {
    const PlqoFormula f = testing::random_plqo(rng, o, 4);
    const auto as = atoms(f);
    if (as.size() > 12) continue;
    const auto dnf = nnf_dnf_literals(f);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << as.size()); ++code) {
      std::vector<bool> vals(as.size());
      for (std::size_t k = 0; k < as.size(); ++k) vals[k] = (code >> k) & 1U;
      bool any = false;
      for (const auto& conj : dnf) {
        bool all = true;
        for (const auto& lit : conj) all = all && (skeleton(lit.atom, as, vals) == lit.positive);
        any = any || all;
      }
      ASSERT_EQ(any, skeleton(f, as, vals)) << print_plqo(f);
      EXPECT_EQ(eval_skeleton(f, as, vals), skeleton(f, as, vals));
    }
  }
}

TEST(PlqoProperty, ConjunctionFormulaMatchesLiterals) {
  testing::Rng rng(32);
  testing::PlqoGenOptions o;
  for (int i = 0; i < 100; ++i) {
    const PlqoFormula f = testing::random_plqo(rng, o, 3);
    for (const auto& conj : nnf_dnf_literals(f)) {
      const PlqoFormula c = conjunction_formula(conj);
      const auto as = atoms(c);
      std::vector<bool> vals(as.size());
      for (std::size_t k = 0; k < as.size(); ++k)
        for (const auto& lit : conj)
          if (lit.atom == as[k]) vals[k] = lit.positive;
      EXPECT_TRUE(skeleton(c, as, vals)) << print_plqo(c);
    }
  }
}

}  // namespace
}  // namespace plqo
