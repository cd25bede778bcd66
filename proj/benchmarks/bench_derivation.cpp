#include "diffideal/derivation.hpp"
#include "diffideal/text.hpp"

#include <benchmark/benchmark.h>

using namespace diffideal;

namespace {

void BM_DRatfunc(benchmark::State& state) {
  RingPtr r = Ring::make({"X", "Y", "Z"});
  DifferentialRing d = DifferentialRing::from_polynomials(
      r, {parse_polynomial(r, "Y*Z"), parse_polynomial(r, "X^2 - Z"), parse_polynomial(r, "X + Y + 1")});
  RationalFunction f = parse_rational_function(r, "(X^3*Y - Z^2 + 4)/(X*Y*Z + Y^2 - 1)");
  for (auto _ : state) benchmark::DoNotOptimize(d_ratfunc(d, f));
}
BENCHMARK(BM_DRatfunc)->Unit(benchmark::kMicrosecond);

void BM_DPoly(benchmark::State& state) {
  RingPtr r = Ring::make({"X", "Y"});
  DifferentialRing d = DifferentialRing::from_polynomials(r, {parse_polynomial(r, "X"), parse_polynomial(r, "1 + Y^2")});
  MultiPoly p = parse_polynomial(r, "(X + 2*Y - 1)^6");
  for (auto _ : state) benchmark::DoNotOptimize(d_poly(d, p));
}
BENCHMARK(BM_DPoly)->Unit(benchmark::kMicrosecond);

} // namespace
