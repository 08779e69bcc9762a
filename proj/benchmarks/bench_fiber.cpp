#include <benchmark/benchmark.h>

#include "sefib/birat.hpp"
#include "sefib/fiber.hpp"
#include "sefib/fixtures.hpp"

namespace {

struct Watkins {
  sefib::FiberSystem system;
  sefib::ProjPoint point;
};

const Watkins& watkins() {
  static const Watkins w = [] {
    const auto fx = sefib::load_fixture("watkins14");
    const sefib::CurveWithPoints cwp{fx.curve, fx.points};
    return Watkins{sefib::build_fiber(cwp.config()), sefib::to_fiber_point(cwp)};
  }();
  return w;
}

void BM_WatkinsBuild(benchmark::State& state) {
  const auto config = watkins().system.config;
  for (auto _ : state) benchmark::DoNotOptimize(sefib::build_fiber(config).equations.size());
}
BENCHMARK(BM_WatkinsBuild);

void BM_WatkinsOnFiber(benchmark::State& state) {
  const auto& w = watkins();
  for (auto _ : state) benchmark::DoNotOptimize(sefib::on_fiber(w.system, w.point).on_fiber);
}
BENCHMARK(BM_WatkinsOnFiber);

void BM_WatkinsJacobianRank(benchmark::State& state) {
  const auto& w = watkins();
  for (auto _ : state) benchmark::DoNotOptimize(sefib::smooth_at(w.system, w.point).rank);
}
BENCHMARK(BM_WatkinsJacobianRank)->Unit(benchmark::kMillisecond);

void BM_WatkinsVerify(benchmark::State& state) {
  const auto fx = sefib::load_fixture("watkins14");
  for (auto _ : state) benchmark::DoNotOptimize(sefib::verify(fx).passed());
}
BENCHMARK(BM_WatkinsVerify)->Unit(benchmark::kMillisecond);

}  // namespace
