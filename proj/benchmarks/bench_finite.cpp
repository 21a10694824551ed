#include <benchmark/benchmark.h>

#include "pointfree/congruence.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"

using namespace pointfree;

namespace {

void BM_GenerateCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_corpus({static_cast<std::size_t>(state.range(0))}));
}
BENCHMARK(BM_GenerateCorpus)->DenseRange(2, 5);

void BM_CompletelyBelow(benchmark::State& state) {
  // The table is cached per frame, so each iteration gets a fresh one.
  for (auto _ : state) {
    state.PauseTiming();
    auto f = boolean_frame(static_cast<std::size_t>(state.range(0)));
    state.ResumeTiming();
    benchmark::DoNotOptimize(completely_below(*f));
  }
}
BENCHMARK(BM_CompletelyBelow)->DenseRange(2, 5);

void BM_EnumerateCongruences(benchmark::State& state) {
  auto f = chain_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_congruences(f));
}
BENCHMARK(BM_EnumerateCongruences)->DenseRange(3, 9, 2);

void BM_IteratePi(benchmark::State& state) {
  auto f = chain_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_prenucleus(pi_prenucleus(f)));
}
BENCHMARK(BM_IteratePi)->RangeMultiplier(2)->Range(4, 32);

void BM_FatReflection(benchmark::State& state) {
  auto f = named_frame("B3");
  for (auto _ : state) benchmark::DoNotOptimize(fat_reflection(f));
}
BENCHMARK(BM_FatReflection);

}  // namespace
