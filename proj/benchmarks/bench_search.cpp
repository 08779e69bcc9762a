#include <benchmark/benchmark.h>

#include "sefib/search.hpp"

namespace {

void BM_SearchAb(benchmark::State& state) {
  const sefib::Config config{2, 2, {1, 3, 12}};
  const long height = state.range(0);
  const auto workers = static_cast<unsigned>(state.range(1));
  std::uint64_t space = 0;
  for (auto _ : state) {
    const auto report = sefib::search_ab(config, height, {.workers = workers});
    space = report.search_space_size;
    benchmark::DoNotOptimize(report.hits.size());
  }
  state.counters["candidates/s"] =
      benchmark::Counter(static_cast<double>(space), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SearchAb)->Args({10, 1})->Args({20, 1})->Args({20, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SquareClasses(benchmark::State& state) {
  const sefib::Config config{2, 2, {1, 2, 3, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(sefib::count_square_classes(config, state.range(0)).cumulative);
}
BENCHMARK(BM_SquareClasses)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
