#include <benchmark/benchmark.h>

#include <string>

#include "dehn/bch.hpp"
#include "dehn/blowup.hpp"
#include "dehn/classifier.hpp"
#include "dehn/corpus.hpp"
#include "dehn/homology.hpp"
#include "dehn/stokes.hpp"

using namespace dehn;

namespace {

const char* const kAlgebras[] = {"abels-a4", "abels-2", "sl3-v11", "example-13dim"};

void BM_H2DegreeZero(benchmark::State& state) {
  auto g = corpus_algebra(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(h2_degree_zero(g).dim);
  state.SetLabel(g.name());
}
BENCHMARK(BM_H2DegreeZero)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_KillingDegreeZero(benchmark::State& state) {
  auto g = corpus_algebra(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(killing_degree_zero(g).dim);
  state.SetLabel(g.name());
}
BENCHMARK(BM_KillingDegreeZero)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BlowUp(benchmark::State& state) {
  auto g = corpus_algebra(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(blow_up(g).kernel_dim);
  state.SetLabel(g.name());
}
BENCHMARK(BM_BlowUp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  auto g = corpus_algebra(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g).verdict);
  state.SetLabel(g.name());
}
BENCHMARK(BM_Classify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BchProduct(benchmark::State& state) {
  auto g = corpus_algebra("abels-2");
  Vector x(g.dim()), y(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    x[i] = Rational(static_cast<long>(i) + 1, 3);
    y[i] = Rational(2 - static_cast<long>(i), 5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(bch_product(g, x, y));
}
BENCHMARK(BM_BchProduct)->Unit(benchmark::kMicrosecond);

void BM_GammaIntegral(benchmark::State& state) {
  SolModel m(NormModel::real(), NormModel::real(), 2, 2);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_integral_check(m, k, 12, IntegrandVariant::real).equal);
}
BENCHMARK(BM_GammaIntegral)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_TriangleBound(benchmark::State& state) {
  SolModel m(NormModel::real(), NormModel::real(), 2, 2);
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(triangle_bound(m, r));
}
BENCHMARK(BM_TriangleBound)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
