#include <benchmark/benchmark.h>

#include "foldweyl/chevalley.hpp"
#include "foldweyl/looptrunc.hpp"
#include "foldweyl/oracle.hpp"

using namespace foldweyl;

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldElement a = FieldElement(3) + FieldElement::zeta(3) * FieldElement::sqrt2();
  FieldElement x(1);
  for (auto _ : state) {
    x = x * a;
    if (x.coeff(0) > 1000000) x = FieldElement(1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMultiply);

static void BM_RootSystem(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs(CartanDatum::make('E', 6));
    benchmark::DoNotOptimize(rs.positive_roots().size());
  }
}
BENCHMARK(BM_RootSystem);

static void BM_Freudenthal(benchmark::State& state) {
  const RootSystem rs(CartanDatum::make('E', 6));
  for (auto _ : state) benchmark::DoNotOptimize(rs.irreducible_character({0, 1, 0, 0, 0, 0}));
}
BENCHMARK(BM_Freudenthal)->Unit(benchmark::kMillisecond);

static void BM_ChevalleyE6(benchmark::State& state) {
  for (auto _ : state) {
    ChevalleyAlgebra g(CartanDatum::make('E', 6));
    benchmark::DoNotOptimize(g.dimension());
  }
}
BENCHMARK(BM_ChevalleyE6)->Unit(benchmark::kMillisecond);

static void BM_FoldE6(benchmark::State& state) {
  for (auto _ : state) {
    FoldedAlgebra f('E', 6, 2);
    benchmark::DoNotOptimize(f.eigen_dimensions());
  }
}
BENCHMARK(BM_FoldE6)->Unit(benchmark::kMillisecond);

static void BM_TwistedTruncation(benchmark::State& state) {
  const auto f = std::make_shared<const FoldedAlgebra>('A', 3, 2);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = TruncatedAlgebra::twisted(f, {FieldElement(1), FieldElement(2)}, N);
    benchmark::DoNotOptimize(t.dimension());
  }
}
BENCHMARK(BM_TwistedTruncation)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OracleSl2(benchmark::State& state) {
  const auto pi = pi_lambda_a(CartanDatum::make('A', 1), {static_cast<int>(state.range(0))}, FieldElement(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_weyl_module(pi).dimension);
}
BENCHMARK(BM_OracleSl2)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OracleTwistedA2(benchmark::State& state) {
  const DiagramFold f = DiagramFold::make('A', 2, 2);
  const auto p = pi_sigma_lambda_a(f, {2}, FieldElement(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_weyl_module(p).dimension);
}
BENCHMARK(BM_OracleTwistedA2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
