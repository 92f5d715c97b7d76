#include "ezl/ez_series.hpp"
#include "ezl/laurent.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/stuffle.hpp"
#include "ezl/zeta.hpp"

#include <benchmark/benchmark.h>

namespace ezl {
namespace {

void BM_Zeta(benchmark::State& state) {
  PrecisionContext ctx(static_cast<int>(state.range(0)));
  PrecisionScope scope(ctx);
  const Complex s(Real("0.5"), Real("14.1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta(s, ctx));
  }
}
BENCHMARK(BM_Zeta)->Arg(20)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SeriesDepth(benchmark::State& state) {
  PrecisionContext ctx(30);
  PrecisionScope scope(ctx);
  ComplexPoint s;
  for (int k = 0; k < state.range(0); ++k) {
    s.emplace_back(Real("2.5"), Real("0.5") * k);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ez_value(s, ctx));
  }
}
BENCHMARK(BM_SeriesDepth)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MellinBarnes(benchmark::State& state) {
  PrecisionContext ctx(static_cast<int>(state.range(1)));
  PrecisionScope scope(ctx);
  ComplexPoint s{Complex(Real("0.5"), Real(1)), Complex(Real("-1.5"), Real("-0.25"))};
  if (state.range(0) == 3) {
    s.insert(s.begin(), Complex(Real("2.2"), Real("0.3")));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ez_eval_mb(s, ctx));
  }
}
BENCHMARK(BM_MellinBarnes)->Args({2, 20})->Args({2, 30})->Args({3, 20})->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_ExpandPositive(benchmark::State& state) {
  PrecisionContext ctx(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_positive({2, 1, 1}, static_cast<int>(state.range(0)), ctx));
  }
}
BENCHMARK(BM_ExpandPositive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_MultipleStieltjes(benchmark::State& state) {
  PrecisionContext ctx(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiple_stieltjes_table(static_cast<int>(state.range(0)), 2, ctx));
  }
}
BENCHMARK(BM_MultipleStieltjes)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_StuffleProduct(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stuffle_product(r / 2, r));
  }
}
BENCHMARK(BM_StuffleProduct)->DenseRange(4, 10, 2);

}  // namespace
}  // namespace ezl

BENCHMARK_MAIN();
