#include <benchmark/benchmark.h>

#include <numbers>

#include "nusamp/harness.hpp"
#include "nusamp/reconstruction.hpp"

using namespace nusamp;

namespace {

constexpr double kPi = std::numbers::pi;

void BM_ReconstructPoint(benchmark::State& state) {
  const auto f = make_sinc(kPi / 2);
  const auto seq = make_uniform();
  const std::int64_t N = state.range(0);
  const auto p = plan(seq, N);
  const Reconstructor rec(f, seq, p, make_gaussian(f.sigma(), p.N_star));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec(x));
    x = x < 0.5 ? x + 1e-3 : -0.5;
  }
}
BENCHMARK(BM_ReconstructPoint)->Arg(5)->Arg(20)->Arg(80);

void BM_BuildReconstructor(benchmark::State& state) {
  const auto f = make_sinc(kPi / 2);
  const auto seq = make_perturbed(0.2, 1);
  const auto p = plan(seq, state.range(0));
  const auto reg = make_gaussian(f.sigma(), p.N_star);
  for (auto _ : state) benchmark::DoNotOptimize(Reconstructor(f, seq, p, reg));
}
BENCHMARK(BM_BuildReconstructor)->Arg(5)->Arg(35);

void BM_Sweep(benchmark::State& state) {
  const auto c = parse_config(R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc", "sigma_over_pi": 0.5},
    "regularizer": {"kind": "gaussian"}, "N_list": [5, 9, 13, 17, 21], "grid_points": 128})");
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c, threads));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
