#include "plqo/errors.hpp"
#include "plqo/hilbert.hpp"
#include "plqo/structure_io.hpp"
#include "plqo/syntax.hpp"

#include <gtest/gtest.h>

namespace plqo {
namespace {

using M = Matrix<ComplexScalar>;

M diag(std::initializer_list<long> d) {
  M m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    m(i, i) = ComplexScalar(v);
    ++i;
  }
  return m;
}

M plus_projector() {
  M m(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = ComplexScalar(make_rational(1, 2));
  return m;
}

// A qubit in state |+> with B1 measuring Z and B2 measuring X, plus B3 = Z.
QuantumStructure qubit() {
  const ComplexScalar h(RadicalScalar::sqrt(make_rational(1, 2)));
  std::map<PropSymbol, Pqv> pqvs;
  pqvs.emplace(PropSymbol{1}, Pqv(diag({1, 0})));
  pqvs.emplace(PropSymbol{2}, Pqv(plus_projector()));
  pqvs.emplace(PropSymbol{3}, Pqv(diag({1, 0})));
  return QuantumStructure({h, h}, std::move(pqvs));
}

TEST(Hilbert, PqvValidation) {
  EXPECT_THROW(Pqv(diag({2, 0})), Error);
  M nonhermitian(2, 2);
  nonhermitian(0, 1) = ComplexScalar(1);
  EXPECT_THROW(Pqv{nonhermitian}, Error);
  EXPECT_NO_THROW(Pqv(diag({0, 1})));
}

TEST(Hilbert, StructureValidation) {
  std::map<PropSymbol, Pqv> pqvs;
  pqvs.emplace(PropSymbol{1}, Pqv(diag({1, 0})));
  EXPECT_THROW(QuantumStructure({ComplexScalar(1), ComplexScalar(1)}, pqvs), Error);
  EXPECT_THROW(QuantumStructure({ComplexScalar(1)}, pqvs), Error);
}

TEST(Hilbert, CompatibilityOfQubitMeasurements) {
  const QuantumStructure I = qubit();
  EXPECT_FALSE(compatible(I.pqv(PropSymbol{1}), I.pqv(PropSymbol{2})));
  EXPECT_TRUE(compatible(I.pqv(PropSymbol{1}), I.pqv(PropSymbol{3})));
  EXPECT_TRUE(is_observable(I, parse_prop("B1 & B3")));
  EXPECT_FALSE(is_observable(I, parse_prop("B1 & B2")));
  // B2 is inessential here.
  EXPECT_TRUE(is_observable(I, parse_prop("B1 | (B2 & !B2)")));
}

TEST(Hilbert, ProbabilitiesAreExact) {
  const QuantumStructure I = qubit();
  EXPECT_EQ(prob(I, parse_prop("B1")), RadicalScalar(make_rational(1, 2)));
  EXPECT_EQ(prob(I, parse_prop("B2")), RadicalScalar(1));
  EXPECT_EQ(prob(I, parse_prop("B1 & !B3")), RadicalScalar(0));
  EXPECT_EQ(prob(I, parse_prop("T")), RadicalScalar(1));
  EXPECT_THROW((void)prob(I, parse_prop("B1 & B2")), Error);
  EXPECT_THROW((void)prob(I, parse_prop("B1 | (B2 & !B2)"), FamilyMode::Strict), Error);
}

TEST(Hilbert, Satisfaction) {
  const QuantumStructure I = qubit();
  Assignment rho;
  rho.numeric[1] = make_rational(1, 2);
  EXPECT_TRUE(satisfies(I, rho, parse_plqo("P(B1) = x1")));
  EXPECT_TRUE(satisfies(I, rho, parse_plqo("!O(B1 & B2)")));
  EXPECT_FALSE(satisfies(I, rho, parse_plqo("P(B1 & B2) = 0")));
  EXPECT_FALSE(satisfies(I, rho, parse_plqo("P(B1 & B2) < 1")));
  // Negated probability atoms hold vacuously on unobservable formulas.
  EXPECT_TRUE(satisfies(I, rho, parse_plqo("P(B1 & B2) >= 0")));
  EXPECT_TRUE(satisfies(I, rho, parse_plqo("O(B1) & O(B2)")));
  EXPECT_TRUE(satisfies(I, rho, parse_plqo("P(B1 & B3) < 1")));
}

TEST(Hilbert, FloatModeAgrees) {
  const FloatStructure J = to_float(qubit());
  EXPECT_NEAR(prob(J, parse_prop("B1")), 0.5, 1e-12);
  EXPECT_FALSE(is_observable(J, parse_prop("B1 & B2")));
  EXPECT_TRUE(satisfies(J, Assignment{}, parse_plqo("P(B2) = 1")));
}

TEST(Hilbert, AdamsCheckRejectsIncompatibleStructures) {
  EXPECT_THROW((void)adams_check(qubit(), {}), Error);
}

}  // namespace
}  // namespace plqo
