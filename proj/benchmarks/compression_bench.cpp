#include <benchmark/benchmark.h>

#include "cfgcausal/causal.hpp"
#include "cfgcausal/etc.hpp"
#include "cfgcausal/lz.hpp"
#include "cfgcausal/random.hpp"

namespace cc = cfgcausal;

namespace {

cc::SymbolicSequence random_sequence(std::size_t n, cc::Symbol alphabet, std::uint64_t seed) {
  cc::Rng rng(seed);
  std::vector<cc::Symbol> v(n);
  for (auto& s : v) s = static_cast<cc::Symbol>(rng.below(alphabet));
  return cc::SymbolicSequence(std::move(v), alphabet);
}

void BM_EtcCompress(benchmark::State& state) {
  const auto s = random_sequence(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cc::etc_compress(s).steps);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EtcCompress)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_Lz76(benchmark::State& state) {
  const auto s = random_sequence(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cc::lz76(s).phrases);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lz76)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_EtcConditional(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grammar = cc::etc_compress(random_sequence(n, 4, 3)).grammar;
  const auto target = random_sequence(n, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cc::etc_conditional(target, grammar).applied_steps);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EtcConditional)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_AllModelsBinary(benchmark::State& state) {
  const auto x = random_sequence(1000, 2, 5);
  const auto y = random_sequence(1000, 2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(cc::evaluate_models(x, y, cc::kAllModels));
}
BENCHMARK(BM_AllModelsBinary);

}  // namespace

BENCHMARK_MAIN();
