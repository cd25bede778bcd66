#include "diffideal/darboux.hpp"
#include "diffideal/text.hpp"

#include <benchmark/benchmark.h>

using namespace diffideal;

namespace {

DifferentialRing planar(const std::string& dx, const std::string& dy) {
  RingPtr r = Ring::make({"X", "Y"});
  return DifferentialRing::from_polynomials(r, {parse_polynomial(r, dx), parse_polynomial(r, dy)});
}

void BM_DarbouxRotation(benchmark::State& state) {
  DifferentialRing d = planar("X", "1 + Y^2");
  SearchConfig cfg{static_cast<std::size_t>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(darboux_search(d, cfg));
}
BENCHMARK(BM_DarbouxRotation)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DarbouxQuadratic(benchmark::State& state) {
  DifferentialRing d = planar("X^2 + X*Y", "Y^2");
  SearchConfig cfg{static_cast<std::size_t>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(darboux_search(d, cfg));
}
BENCHMARK(BM_DarbouxQuadratic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace
