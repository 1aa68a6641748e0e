// Serial reference vs blocked OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "ftl/kernels.hpp"

namespace {

using namespace ftl;
using namespace ftl::kernels;

struct Data {
  std::vector<Vec2> df, dg;
  std::vector<double> w;
};

Data make(std::size_t n) {
  std::mt19937_64 gen(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  for (std::size_t k = 0; k < n; ++k) {
    d.df.push_back({1.0 + u(gen), u(gen)});
    d.dg.push_back({u(gen), 1.0 + u(gen)});
  }
  for (std::size_t k = 0; k + 1 < n; ++k) d.w.push_back(1.0 + 0.5 * u(gen));
  return d;
}

void BM_ftl_serial(benchmark::State& state, LsdRoute route) {
  const auto d = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ftl_sum_serial(d.df, d.dg, d.w, route));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ftl_parallel(benchmark::State& state) {
  const auto d = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ftl_sum_parallel(d.df, d.dg, d.w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = max_threads();
}

void BM_shape_sum_serial(benchmark::State& state) {
  const auto d = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shape_sum_serial(d.dg, d.w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_shape_sum_parallel(benchmark::State& state) {
  const auto d = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shape_sum_parallel(d.dg, d.w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ftl_serial, quotient, LsdRoute::ComplexQuotient)->Arg(32)->Arg(1024)->Arg(100000);
BENCHMARK_CAPTURE(BM_ftl_serial, dot, LsdRoute::DotProduct)->Arg(32)->Arg(1024)->Arg(100000);
BENCHMARK_CAPTURE(BM_ftl_serial, cross, LsdRoute::CrossMultiplied)->Arg(32)->Arg(1024)->Arg(100000);
BENCHMARK(BM_ftl_parallel)->Arg(32)->Arg(1024)->Arg(100000);
BENCHMARK(BM_shape_sum_serial)->Arg(32)->Arg(1024)->Arg(100000);
BENCHMARK(BM_shape_sum_parallel)->Arg(32)->Arg(1024)->Arg(100000);

BENCHMARK_MAIN();
