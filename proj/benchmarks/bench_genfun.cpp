#include <benchmark/benchmark.h>

#include <complex>

#include "nusamp/genfun.hpp"
#include "nusamp/sequences.hpp"

using namespace nusamp;

namespace {

// Precise path: near factors multiplied, far pairs summed as compensated logs.
void BM_PhiPrecise(benchmark::State& state) {
  const auto seq = make_perturbed(0.2, 1);
  const GeneratingFunction gf(seq, ProductWindow{state.range(0)});
  const std::complex<double> z{0.37, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(gf.phi(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PhiPrecise)->RangeMultiplier(4)->Range(512, 131072)->Complexity(benchmark::oN);

void BM_PhiFast(benchmark::State& state) {
  const auto seq = make_perturbed(0.2, 1);
  const GeneratingFunction gf(seq, ProductWindow{state.range(0)});
  const std::complex<double> z{0.37, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(gf.phi_fast(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PhiFast)->RangeMultiplier(4)->Range(512, 131072)->Complexity(benchmark::oN);

// Sine-type nodes are roots found on demand; the first pass fills the cache.
void BM_SineTypeNodes(benchmark::State& state) {
  for (auto _ : state) {
    const auto seq = make_sine_type(1.0, SineCombo{{{0.3, 1.0}}});
    benchmark::DoNotOptimize(seq[state.range(0)]);
  }
}
BENCHMARK(BM_SineTypeNodes)->Arg(512)->Arg(4096);

}  // namespace
