#include "diffideal/gcd.hpp"
#include "diffideal/text.hpp"

#include <benchmark/benchmark.h>

using namespace diffideal;

namespace {

void BM_GcdSharedFactor(benchmark::State& state) {
  RingPtr r = Ring::make({"X", "Y", "Z"});
  MultiPoly g = parse_polynomial(r, "X^2*Y - 3*Y*Z + Z^3 + 1");
  MultiPoly a = g * parse_polynomial(r, "X*Y*Z + X^3 - 2*Y^2 + 5");
  MultiPoly b = g * parse_polynomial(r, "X^2 - Y*Z^2 + 7*Z - 1");
  for (auto _ : state) benchmark::DoNotOptimize(multivariate_gcd(a, b));
}
BENCHMARK(BM_GcdSharedFactor)->Unit(benchmark::kMicrosecond);

void BM_GcdCoprime(benchmark::State& state) {
  RingPtr r = Ring::make({"X", "Y", "Z"});
  MultiPoly a = parse_polynomial(r, "(X + Y + Z)^4 - 1");
  MultiPoly b = parse_polynomial(r, "(X - Y + 2*Z)^4 + X");
  for (auto _ : state) benchmark::DoNotOptimize(multivariate_gcd(a, b));
}
BENCHMARK(BM_GcdCoprime)->Unit(benchmark::kMicrosecond);

} // namespace
