#include <benchmark/benchmark.h>

#include "sefib/cyclotomic.hpp"
#include "sefib/trivial_points.hpp"

namespace {

void BM_CycloMul(benchmark::State& state) {
  const auto d = static_cast<unsigned long>(state.range(0));
  std::vector<sefib::Rational> c;
  for (unsigned long k = 0; k < sefib::euler_phi(d); ++k) c.emplace_back(static_cast<long>(k) - 3, 7);
  const sefib::CyclotomicElement x(d, c);
  const auto y = sefib::CyclotomicElement::generator(d) + sefib::CyclotomicElement::one(d);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMul)->Arg(6)->Arg(12)->Arg(30);

void BM_TrivialPoints(benchmark::State& state) {
  sefib::TrivialPointOptions opts;
  opts.keep_tuples = false;
  for (auto _ : state) benchmark::DoNotOptimize(sefib::trivial_points(3, 3, 4, opts).passed());
}
BENCHMARK(BM_TrivialPoints)->Unit(benchmark::kMillisecond);

}  // namespace
