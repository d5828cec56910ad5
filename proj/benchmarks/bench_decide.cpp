#include "plqo/decide.hpp"
#include "plqo/syntax.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace plqo;

std::string chain(const char* op, unsigned n) {
  std::string out = "B1";
  for (unsigned k = 2; k <= n; ++k) out += std::string(" ") + op + " B" + std::to_string(k);
  return out;
}

void BM_ObsNegation(benchmark::State& state) {
  const std::string a = chain("&", static_cast<unsigned>(state.range(0)));
  const PlqoFormula phi = parse_plqo("O(" + a + ") <-> O(!(" + a + "))");
  for (auto _ : state) benchmark::DoNotOptimize(check_valid(phi));
}
BENCHMARK(BM_ObsNegation)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Conservativeness(benchmark::State& state) {
  const PropFormula a = parse_prop(chain("|", static_cast<unsigned>(state.range(0))) + " | !B1");
  for (auto _ : state) benchmark::DoNotOptimize(conservativeness_check(a));
}
BENCHMARK(BM_Conservativeness)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Countermodel(benchmark::State& state) {
  const PlqoFormula phi = parse_plqo("(O(B1) & O(B2)) <-> O(B1 & B2)");
  for (auto _ : state) benchmark::DoNotOptimize(check_valid(phi));
}
BENCHMARK(BM_Countermodel)->Unit(benchmark::kMillisecond);

void BM_SchemaFig1(benchmark::State& state) {
  const std::vector<PropFormula> args{parse_prop("B1 & B2"), parse_prop("B2 & B1")};
  for (auto _ : state) benchmark::DoNotOptimize(derive_schema(Schema::ObsEquivalence, args));
}
BENCHMARK(BM_SchemaFig1)->Unit(benchmark::kMillisecond);

void BM_DisjunctBranching(benchmark::State& state) {
  DecideOptions o;
  o.parallel = state.range(1) != 0;
  std::string f = "P(B1) < 1/2";
  for (unsigned k = 2; k <= static_cast<unsigned>(state.range(0)); ++k)
    f = "(" + f + ") | (O(B1 & B" + std::to_string(k) + ") & P(B" + std::to_string(k) + ") >= 1/2)";
  const PlqoFormula phi = parse_plqo(f);
  for (auto _ : state) benchmark::DoNotOptimize(check_valid(phi, o));
}
BENCHMARK(BM_DisjunctBranching)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
