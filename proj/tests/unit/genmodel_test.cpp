#include "plqo/errors.hpp"
#include "plqo/genmodel.hpp"
#include "plqo/syntax.hpp"

#include "../support/generators.hpp"
#include "../support/semantic_oracle.hpp"

#include <gtest/gtest.h>

namespace plqo {
namespace {

const PropSymbol b1{1};
const PropSymbol b2{2};
const PropSymbol b3{3};

GenericModelSpec spec_of(std::vector<PropSymbol> syms,
                         std::vector<std::pair<PropSymbol, PropSymbol>> nc) {
  GenericModelSpec s;
  s.symbols = std::move(syms);
  s.nc = std::move(nc);
  const std::size_t n = std::size_t{1} << s.symbols.size();
  for (std::size_t k = 0; k < n; ++k) s.masses.push_back(make_rational(1, static_cast<long>(n)));
  return s;
}

TEST(GenModel, DimensionAndState) {
  const auto spec = spec_of({b1, b2}, {{b1, b2}});
  const QuantumStructure I = build_generic(spec);
  EXPECT_EQ(I.dim(), 6U);
  EXPECT_EQ(I.state()[0], ComplexScalar(make_rational(1, 2)));
  EXPECT_TRUE(I.state()[4].is_zero());
}

TEST(GenModel, ValidationErrors) {
  auto bad = spec_of({b1, b2}, {});
  bad.masses.pop_back();
  EXPECT_THROW(build_generic(bad), Error);
  auto neg = spec_of({b1}, {});
  neg.masses = {make_rational(3, 2), make_rational(-1, 2)};
  EXPECT_THROW(build_generic(neg), Error);
  EXPECT_THROW(build_generic(spec_of({b1, b2}, {{b1, b3}})), Error);
  EXPECT_THROW(build_generic(spec_of({b1, b2}, {{b1, b1}})), Error);
}

TEST(GenModel, CommutatorEntriesAreHalves) {
  const auto spec = spec_of({b1, b2}, {{b1, b2}});
  const QuantumStructure I = build_generic(spec);
  const auto c = commutator_witness(I, b1, b2);
  bool nonzero = false;
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t col = 0; col < c.cols(); ++col) {
      const ComplexScalar& z = c(r, col);
      if (z.is_zero()) continue;
      nonzero = true;
      EXPECT_TRUE(z == ComplexScalar(make_rational(1, 2)) ||
                  z == ComplexScalar(make_rational(-1, 2)));
    }
  EXPECT_TRUE(nonzero);
}

TEST(GenModel, ObservableSquaresToIdentity) {
  const auto spec = spec_of({b1, b2, b3}, {{b1, b2}, {b2, b3}});
  for (const auto& s : spec.symbols) {
    const auto o = build_observable(spec, s);
    EXPECT_TRUE((o * o - Matrix<ComplexScalar>::identity(o.rows())).is_zero(0));
    EXPECT_TRUE((o - o.adjoint()).is_zero(0));
  }
}

// Commutator is zero exactly for compatible pairs, over every incompatibility graph.
TEST(GenModelProperty, ExhaustiveCompatibility) {
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<PropSymbol> syms;
    for (unsigned k = 1; k <= n; ++k) syms.push_back(PropSymbol{k});
    std::vector<std::pair<PropSymbol, PropSymbol>> pairs;
    for (std::size_t i = 0; i < syms.size(); ++i)
      for (std::size_t j = i + 1; j < syms.size(); ++j) pairs.emplace_back(syms[i], syms[j]);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
      std::vector<std::pair<PropSymbol, PropSymbol>> nc;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((m >> p) & 1U) nc.push_back(pairs[p]);
      const auto I = build_generic(spec_of(syms, nc));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const bool in_nc = (m >> p) & 1U;
        EXPECT_EQ(commutator(I.pqv(pairs[p].first), I.pqv(pairs[p].second)).is_zero(0), !in_nc);
      }
    }
  }
}

TEST(GenModelProperty, ProbabilityIsMassSum) {
  testing::Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const std::vector<PropSymbol> syms{b1, b2, b3};
    const auto spec = testing::random_spec(rng, syms);
    const auto I = build_generic(spec);
    const PropFormula a = testing::random_prop(rng, 3, 3);
    if (!is_observable(I, a)) continue;
    Rational expected = 0;
    for (std::uint64_t c = 0; c < 8; ++c)
      if (testing::eval_code(a, syms, c)) expected += spec.masses[c];
    EXPECT_EQ(prob(I, a), RadicalScalar(expected)) << print_prop(a);
  }
}

TEST(GenModel, ModelFromWitnessRebuildsStructure) {
  testing::Rng rng(72);
  const PlqoFormula phi = parse_plqo("O(B1 & B2) -> P(B1) >= 1/3");
  const auto spec = testing::random_spec(rng, {b1, b2});
  const Witness w = testing::witness_of(phi, spec, Assignment{});
  const auto m = model_from_witness(phi, w);
  EXPECT_EQ(m.spec.masses, spec.masses);
  EXPECT_EQ(satisfies(m.structure, m.assignment, phi), translate_formula(phi).holds(w));
}

TEST(GenModel, ModelFromWitnessRejectsIncompleteWitness) {
  const PlqoFormula phi = parse_plqo("O(B1)");
  try {
    (void)model_from_witness(phi, Witness{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WitnessIncomplete);
  }
}

}  // namespace
}  // namespace plqo
