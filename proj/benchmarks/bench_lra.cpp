#include "plqo/lra.hpp"
#include "plqo/translate.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace plqo;

ConstraintSet random_system(std::mt19937_64& rng, unsigned vars, unsigned rows) {
  ConstraintSet cs;
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> rhs(-4, 6);
  std::uniform_int_distribution<int> op(0, 4);
  for (unsigned r = 0; r < rows; ++r) {
    LinExpr lhs;
    for (unsigned v = 1; v <= vars; ++v) lhs += LinExpr::of(RcofVar::numeric(v), Rational(coeff(rng)));
    static constexpr CmpOp kOps[] = {CmpOp::Eq, CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge};
    cs.add(LinConstraint::compare(lhs, kOps[op(rng)], LinExpr::constant_of(Rational(rhs(rng)))));
  }
  return cs;
}

void BM_RandomSystem(benchmark::State& state) {
  const auto vars = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<ConstraintSet> systems;
  for (int i = 0; i < 64; ++i) systems.push_back(random_system(rng, vars, 2 * vars));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(feasible(systems[i++ % systems.size()]));
}
BENCHMARK(BM_RandomSystem)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

// Distribution constraints over n symbols with one strict probability bound.
void BM_DistributionSystem(benchmark::State& state) {
  SymbolSet a;
  PropFormula conj = PropFormula::verum();
  for (unsigned k = 1; k <= static_cast<unsigned>(state.range(0)); ++k) {
    a.insert(PropSymbol{k});
    conj = PropFormula::conj(conj, PropFormula::atom(k));
  }
  ConstraintSet cs = q_adams(a, {conj});
  cs.add(LinConstraint::compare(LinExpr::of(RcofVar::prob_of(conj)), CmpOp::Gt,
                                LinExpr::constant_of(make_rational(1, 2))));
  for (auto _ : state) benchmark::DoNotOptimize(feasible(cs));
  state.counters["constraints"] = static_cast<double>(cs.constraints.size());
}
BENCHMARK(BM_DistributionSystem)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
