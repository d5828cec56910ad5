#include "plqo/errors.hpp"
#include "plqo/prop.hpp"
#include "plqo/syntax.hpp"

#include "../support/generators.hpp"
#include "../support/semantic_oracle.hpp"

#include <gtest/gtest.h>

namespace plqo {
namespace {

PropFormula B(unsigned k) { return PropFormula::atom(k); }

TEST(Prop, EvalOnValuation) {
  const Valuation v{{PropSymbol{1}, true}, {PropSymbol{2}, false}};
  EXPECT_TRUE(eval(PropFormula::impl(B(2), B(1)), v));
  EXPECT_FALSE(eval(PropFormula::conj(B(1), B(2)), v));
  EXPECT_TRUE(eval(PropFormula::verum(), Valuation{}));
}

TEST(Prop, EvalOutsideDomainThrows) {
  const Valuation v{{PropSymbol{1}, true}};
  try {
    (void)eval(B(3), v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingSymbol);
  }
}

TEST(Prop, TautologyClassics) {
  EXPECT_TRUE(is_tautology(PropFormula::disj(B(1), PropFormula::neg(B(1)))));
  EXPECT_TRUE(is_tautology(parse_prop("((B1 -> B2) -> B1) -> B1")));
  EXPECT_FALSE(is_tautology(parse_prop("B1 -> B2")));
  EXPECT_FALSE(is_tautology(PropFormula::falsum()));
}

TEST(Prop, TautologyBudget) {
  PropFormula big = PropFormula::verum();
  for (unsigned k = 1; k <= 5; ++k) big = PropFormula::conj(big, B(k));
  try {
    (void)is_tautology(big, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Prop, EssentialDropsVacuousSymbols) {
  EXPECT_EQ(essential_symbols(parse_prop("B1 | (B2 & !B2)")), SymbolSet{PropSymbol{1}});
  EXPECT_TRUE(essential_symbols(parse_prop("B1 -> B1")).empty());
  EXPECT_EQ(essential_symbols(parse_prop("B1 <-> B2")), (SymbolSet{PropSymbol{1}, PropSymbol{2}}));
}

TEST(Prop, AnfOfKnownForms) {
  EXPECT_EQ(anf(parse_prop("B1 <-> B2")).to_string(), "1 + B1 + B2");
  EXPECT_EQ(anf(parse_prop("B1 | B2")).to_string(), "B1 + B1*B2 + B2");
  EXPECT_EQ(anf(parse_prop("B1 & !B1")).to_string(), "0");
}

TEST(Prop, PhiAUIsTheUniqueSatisfyingValuation) {
  const SymbolSet a{PropSymbol{1}, PropSymbol{2}, PropSymbol{3}};
  const std::vector<PropSymbol> order(a.begin(), a.end());
  for (std::uint64_t u = 0; u < 8; ++u) {
    SymbolSet us;
    for (std::size_t i = 0; i < 3; ++i)
      if ((u >> i) & 1U) us.insert(order[i]);
    const PropFormula f = phi_A_U(a, us);
    for (std::uint64_t c = 0; c < 8; ++c) EXPECT_EQ(testing::eval_code(f, order, c), c == u);
  }
  EXPECT_EQ(phi_A_U({}, {}), PropFormula::verum());
}

TEST(PropProperty, TruthTableMatchesIndependentEvaluator) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const PropFormula f = testing::random_prop(rng, 4, 4);
    const std::vector<PropSymbol> order{PropSymbol{1}, PropSymbol{2}, PropSymbol{3},
                                        PropSymbol{4}};
    const auto table = truth_table(f, order);
    ASSERT_EQ(table.size(), 16U);
    bool all = true;
    for (std::uint64_t c = 0; c < 16; ++c) {
      EXPECT_EQ(table[c], testing::eval_code(f, order, c)) << print_prop(f);
      all = all && table[c];
    }
    EXPECT_EQ(is_tautology(f), all);
  }
}

TEST(PropProperty, AnfMatchesMoebiusTransform) {
  testing::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const PropFormula f = testing::random_prop(rng, 4, 4);
    const std::vector<PropSymbol> order{PropSymbol{1}, PropSymbol{2}, PropSymbol{3},
                                        PropSymbol{4}};
    std::set<SymbolSet> expected;
    for (auto m : testing::anf_masks(f, order)) {
      SymbolSet mono;
      for (std::size_t k = 0; k < 4; ++k)
        if ((m >> k) & 1U) mono.insert(order[k]);
      expected.insert(mono);
    }
    EXPECT_EQ(anf(f).monomials, expected) << print_prop(f);
  }
}

TEST(PropProperty, EssentialAgreesWithBruteForceAndAnf) {
  testing::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const PropFormula f = testing::random_prop(rng, 4, 4);
    const SymbolSet e = essential_symbols(f);
    EXPECT_EQ(e, essential_symbols_bruteforce(f)) << print_prop(f);
    EXPECT_EQ(e, anf(f).variables()) << print_prop(f);
    for (const auto& s : e) EXPECT_TRUE(f.symbols().count(s));
  }
}

}  // namespace
}  // namespace plqo
