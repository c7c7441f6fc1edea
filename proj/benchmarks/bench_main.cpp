#include <benchmark/benchmark.h>

#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/gromov.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/presheaf.hpp"

using namespace vqcat;

static void BM_HausdorffCategory(benchmark::State& state) {
  std::mt19937_64 rng(1);
  VCategory x = random_category(Quantale::cost(), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    HausdorffCategory hx(x, HausdorffVariant::plain);
    benchmark::DoNotOptimize(hx.materialize());
  }
}
BENCHMARK(BM_HausdorffCategory)->DenseRange(3, 7, 2);

static void BM_Htilde(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  VCategory x = random_category(Quantale::cost(), n, rng);
  VCategory y = random_category(Quantale::cost(), n, rng);
  VModule phi = random_module(x, y, rng);
  for (auto _ : state) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
      benchmark::DoNotOptimize(htilde(phi, {a}, Subset::all(n)));
  }
}
BENCHMARK(BM_Htilde)->DenseRange(4, 10, 3);

static void BM_ModuleEnumeration(benchmark::State& state) {
  Quantale q = Quantale::three_chain();
  auto cats = enumerate_categories(q, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& x : cats) count += enumerate_modules(x, x).size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ModuleEnumeration)->Arg(1)->Arg(2);

static void BM_PresheafCategory(benchmark::State& state) {
  std::mt19937_64 rng(3);
  VCategory x = random_category(Quantale::lukasiewicz(3), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PresheafCategory(x).size());
}
BENCHMARK(BM_PresheafCategory)->DenseRange(2, 4);

static void BM_GenericExtension(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Quantale q = Quantale::three_chain();
  VCategory x = random_category(q, 2, rng);
  VCategory y = random_category(q, 2, rng);
  VModule phi = random_module(x, y, rng);
  FunctorObject k(FunctorKind::H_sym);
  for (auto _ : state) benchmark::DoNotOptimize(extend_functor(k, phi));
}
BENCHMARK(BM_GenericExtension);

static void BM_CostOptimizer(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  VCategory x = random_category(Quantale::cost(), n, rng);
  VCategory y = random_category(Quantale::cost(), n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_cost_pair(x, y, GromovVariant::plain).value);
  }
}
BENCHMARK(BM_CostOptimizer)->DenseRange(1, 3);
BENCHMARK_MAIN();
