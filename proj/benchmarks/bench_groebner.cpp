#include "diffideal/groebner.hpp"
#include "diffideal/text.hpp"

#include <benchmark/benchmark.h>

using namespace diffideal;

namespace {

std::vector<MultiPoly> cyclic(const RingPtr& r, int n) {
  std::vector<MultiPoly> gens;
  const auto& names = r->names();
  for (int len = 1; len < n; ++len) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (i) s += " + ";
      for (int j = 0; j < len; ++j) s += (j ? "*" : "") + names[(i + j) % n];
    }
    gens.push_back(parse_polynomial(r, s));
  }
  std::string prod;
  for (int i = 0; i < n; ++i) prod += (i ? "*" : "") + names[i];
  gens.push_back(parse_polynomial(r, prod + " - 1"));
  return gens;
}

void BM_BuchbergerCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr r = Ring::make(names);
  auto gens = cyclic(r, n);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex(r->nsymbols())));
}
BENCHMARK(BM_BuchbergerCyclic)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuchbergerLexElimination(benchmark::State& state) {
  RingPtr r = Ring::make({"X", "Y", "Z"});
  std::vector<MultiPoly> gens{parse_polynomial(r, "X^2 + Y^2 + Z^2 - 3"), parse_polynomial(r, "X*Y - Z"),
                              parse_polynomial(r, "X + Y - 2*Z")};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::lex(3)));
}
BENCHMARK(BM_BuchbergerLexElimination)->Unit(benchmark::kMillisecond);

} // namespace
