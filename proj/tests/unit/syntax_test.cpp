#include "plqo/errors.hpp"
#include "plqo/syntax.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

namespace plqo {
namespace {

TEST(Syntax, PrecedenceAndAssociativity) {
  const PropFormula f = parse_prop("B1 & B2 | B3 -> B4");
  EXPECT_EQ(f, PropFormula::impl(PropFormula::disj(PropFormula::conj(PropFormula::atom(1),
                                                                     PropFormula::atom(2)),
                                                   PropFormula::atom(3)),
                                 PropFormula::atom(4)));
  EXPECT_EQ(parse_prop("B1 -> B2 -> B3"),
            PropFormula::impl(PropFormula::atom(1),
                              PropFormula::impl(PropFormula::atom(2), PropFormula::atom(3))));
}

TEST(Syntax, DerivedComparisonsDesugar) {
  const PropFormula b1 = PropFormula::atom(1);
  const RcofTerm half = RcofTerm::fraction(1, 2);
  EXPECT_EQ(parse_plqo("P(B1) >= 1/2"), PlqoFormula::prob_ge(b1, half));
  EXPECT_EQ(parse_plqo("P(B1) <= 1/2"), PlqoFormula::prob_le(b1, half));
  EXPECT_EQ(parse_plqo("P(B1) > 1/2"), PlqoFormula::prob_gt(b1, half));
  EXPECT_EQ(parse_plqo("P(B1) = x3"), PlqoFormula::prob(b1, Cmp::Eq, RcofTerm::var(3)));
}

TEST(Syntax, PrintsDerivedForms) {
  EXPECT_EQ(print_plqo(parse_plqo("P(B1 & B2) >= 0")), "P(B1 & B2) >= 0");
  EXPECT_EQ(print_plqo(parse_plqo("(O(B1) & O(B2)) <-> O(B1 & B2)")),
            "O(B1) & O(B2) <-> O(B1 & B2)");
}

TEST(Syntax, ParseErrorCarriesPosition) {
  try {
    (void)parse_plqo("O(B1) &\n  P(B2) ?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW((void)parse_prop("O(B1)"), ParseError);
  EXPECT_THROW((void)parse_plqo("B1"), ParseError);
  EXPECT_THROW((void)parse_plqo("O(O(B1))"), ParseError);
}

TEST(Syntax, TermRoundTrip) {
  for (const char* t : {"0", "1", "x1 + 2", "x1 * x2 - 1/3", "-(x1 + x2)", "3 * (x1 + 1)"}) {
    const RcofTerm p = parse_term(t);
    EXPECT_EQ(parse_term(print_term(p)), p) << t;
  }
}

TEST(SyntaxProperty, PropRoundTripOnRandomFormulas) {
  testing::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const PropFormula f = testing::random_prop(rng, 5, 5);
    EXPECT_EQ(parse_prop(print_prop(f)), f) << print_prop(f);
    EXPECT_EQ(parse_prop(print_prop(f, true)), f) << print_prop(f, true);
  }
}

TEST(SyntaxProperty, PlqoRoundTripOnRandomFormulas) {
  testing::Rng rng(22);
  testing::PlqoGenOptions o;
  o.symbols = 3;
  o.numeric_vars = true;
  for (int i = 0; i < 1000; ++i) {
    const PlqoFormula f = testing::random_plqo(rng, o, 3);
    EXPECT_EQ(parse_plqo(print_plqo(f)), f) << print_plqo(f);
  }
}

}  // namespace
}  // namespace plqo
