#include <benchmark/benchmark.h>

#include <ccomp/ccomp.hpp>
#include <sampling.hpp>

using namespace ccomp;

namespace {

cli::SampledPair pair_for(benchmark::State& state) {
  cli::Sampler s(static_cast<std::uint64_t>(state.range(0)));
  const Index n = state.range(0);
  return {s.subspace(n, n / 2), s.subspace(n, n / 2)};
}

}  // namespace

static void BM_Svd(benchmark::State& state) {
  cli::Sampler s(1);
  const Matrix a = s.gaussian(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(svd(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(4, 128)->Complexity();

static void BM_PrincipalAngles(benchmark::State& state) {
  const auto p = pair_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(principal_angles(p.M, p.N));
}
BENCHMARK(BM_PrincipalAngles)->RangeMultiplier(2)->Range(4, 128);

static void BM_Intersect(benchmark::State& state) {
  const auto p = pair_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(p.M, p.N));
}
BENCHMARK(BM_Intersect)->RangeMultiplier(2)->Range(4, 128);

static void BM_Decide(benchmark::State& state) {
  const auto p = pair_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(has_common_complement(p.M, p.N));
}
BENCHMARK(BM_Decide)->RangeMultiplier(2)->Range(4, 64);

static void BM_CommonComplement(benchmark::State& state) {
  const auto p = pair_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(common_complement(p.M, p.N));
}
BENCHMARK(BM_CommonComplement)->RangeMultiplier(2)->Range(4, 64);

static void BM_InvolutionRoundTrip(benchmark::State& state) {
  const auto p = pair_for(state);
  for (auto _ : state) {
    const auto c = involution_for_pair(p.M, p.N);
    benchmark::DoNotOptimize(complement_from_involution(p.M, p.N, c.S));
  }
}
BENCHMARK(BM_InvolutionRoundTrip)->RangeMultiplier(2)->Range(4, 64);

static void BM_NonclosedSumExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonclosed_sum_pair(state.range(0)));
}
BENCHMARK(BM_NonclosedSumExample)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
