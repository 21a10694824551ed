#include <benchmark/benchmark.h>

#include <random>

#include "pointfree/attachment.hpp"
#include "pointfree/interval.hpp"

using namespace pointfree;

namespace {

std::vector<IntervalOpen> samples(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<IntervalOpen> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_interval_open(rng, 4, 8));
  return out;
}

void BM_IntervalHeyting(benchmark::State& state) {
  auto xs = samples(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(io_heyting(xs[i % 64], xs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_IntervalHeyting);

void BM_IntervalFill(benchmark::State& state) {
  auto xs = samples(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(io_fill(xs[i++ % 64]));
}
BENCHMARK(BM_IntervalFill);

void BM_PointFilterChallenge(benchmark::State& state) {
  auto y = point_filter(0);
  std::mt19937_64 rng(2);
  std::vector<IntervalOpen> challenges;
  while (challenges.size() < 64) {
    auto c = random_unpunctured(rng);
    if (!c.is_full()) challenges.push_back(c);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(y.regular_witness(challenges[i++ % 64]));
}
BENCHMARK(BM_PointFilterChallenge);

void BM_AttachmentJoin(benchmark::State& state) {
  auto w = parse_attachment_spec("0,1,5/2,4");
  std::mt19937_64 rng(3);
  std::vector<LWElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_lw(w, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    std::vector<LWElement> pair{xs[i % 64], xs[(i + 7) % 64]};
    benchmark::DoNotOptimize(lw_join(w, pair));
    ++i;
  }
}
BENCHMARK(BM_AttachmentJoin);

void BM_RegularityEvidence(benchmark::State& state) {
  auto w = parse_attachment_spec("0,2");
  auto e = parse_lw(w, "{0,1}:(-1,3)");
  for (auto _ : state) benchmark::DoNotOptimize(lw_regularity_evidence(w, e, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RegularityEvidence)->DenseRange(2, 6, 2);

}  // namespace
