#include <benchmark/benchmark.h>

#include "fuzzn/analysis.hpp"
#include "fuzzn/arith.hpp"
#include "fuzzn/conv.hpp"
#include "fuzzn/smooth.hpp"

namespace {

using fuzzn::FuzzyNumber;

void BM_Nabla(benchmark::State& state) {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  FuzzyNumber w = fuzzn::make_w_p(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzn::nabla(u, w));
  }
}
BENCHMARK(BM_Nabla);

void BM_DInf(benchmark::State& state) {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  FuzzyNumber v = fuzzn::nabla(u, fuzzn::make_w_p(0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzn::d_inf(u, v));
  }
}
BENCHMARK(BM_DInf);

void BM_SupMinGrid(benchmark::State& state) {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  FuzzyNumber v = FuzzyNumber::trapezoidal(1, 2, 3, 4);
  double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzn::sup_min_grid(u, v, h));
  }
}
BENCHMARK(BM_SupMinGrid)->Arg(128)->Arg(512)->Arg(2048);

void BM_Synthesize(benchmark::State& state) {
  fuzzn::SmootherSpec spec;
  spec.p = 0.5;
  spec.s_l = {0.25, 0.5, 0.75, 1.0};
  spec.s_r = {1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzn::synthesize(spec));
  }
}
BENCHMARK(BM_Synthesize);

void BM_Approximate(benchmark::State& state) {
  FuzzyNumber u = FuzzyNumber::triangular(0, 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzn::approximate(u, {0.5, 0.25, 0.125}));
  }
}
BENCHMARK(BM_Approximate);

}  // namespace

BENCHMARK_MAIN();
