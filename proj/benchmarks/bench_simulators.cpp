#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "fode/cfe.hpp"
#include "fode/gl.hpp"
#include "fode/statespace.hpp"

namespace {

const fode::FodeModel kPlant{0.8, 0.5, 1.0, 2.2, 0.9};

void BM_SimulatePse(benchmark::State& state) {
  const auto memory = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 3000;
  const auto ss = fode::decompose(kPlant);
  const auto u = fode::SampledSignal::constant(0.1, n, 1.0);
  for (auto _ : state) {
    auto r = fode::simulate_pse(ss, u, memory, n);
    benchmark::DoNotOptimize(r.y.back());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_SimulatePse)->Arg(10)->Arg(100)->Arg(1000);

void BM_SimulateCfe(benchmark::State& state) {
  const std::size_t n = 3000;
  const auto ss = fode::decompose(kPlant);
  const auto u = fode::SampledSignal::constant(0.1, n, 1.0);
  for (auto _ : state) {
    auto r = fode::simulate_cfe(ss, u, n);
    benchmark::DoNotOptimize(r.y.back());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_SimulateCfe);

void BM_GlDifferintegrate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> ramp(n);
  for (std::size_t k = 0; k < n; ++k) ramp[k] = static_cast<double>(k) * 1e-3;
  const fode::SampledSignal f(1e-3, ramp);
  for (auto _ : state) {
    auto d = fode::gl_differintegrate(f, 0.5, n);
    benchmark::DoNotOptimize(d[n - 1]);
  }
}
BENCHMARK(BM_GlDifferintegrate)->Arg(1000)->Arg(10000);

void BM_CfeOperator(benchmark::State& state) {
  const std::size_t n = 10000;
  std::vector<double> ramp(n);
  for (std::size_t k = 0; k < n; ++k) ramp[k] = static_cast<double>(k) * 1e-3;
  const fode::SampledSignal f(1e-3, ramp);
  const auto op = fode::cfe_operator(0.5, 1e-3);
  for (auto _ : state) {
    auto d = op.apply(f);
    benchmark::DoNotOptimize(d[n - 1]);
  }
}
BENCHMARK(BM_CfeOperator);

}  // namespace
BENCHMARK_MAIN();
