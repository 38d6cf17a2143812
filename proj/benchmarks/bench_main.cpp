#include <benchmark/benchmark.h>

#include "framize/parse.hpp"
#include "framize/presentations.hpp"
#include "framize/suites.hpp"

using namespace framize;

static void BM_ScalarGcd(benchmark::State& state) {
  FieldPtr f = make_field({"l", "m"});
  Scalar a = parse_scalar("(l^3*m^2 - l*m + 7) * (l^2 + m - 1)", f);
  Scalar b = parse_scalar("(l*m^4 + 3) * (l^2 + m - 1)", f);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_ScalarGcd);

static void BM_ReduceQuartic(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  RuleSystem sys = presentation({AlgebraTag::FBMW, d}, 2);
  Element e = parse_element("g1^4 + m*g1^3 + (m-2)*g1^2 + m*(m-1)*g1 - (m-1)", sys.field(),
                            sys.context());
  for (auto _ : state) benchmark::DoNotOptimize(reduce(e, sys).final.term_count());
}
BENCHMARK(BM_ReduceQuartic)->Arg(1)->Arg(2)->Arg(3);

static void BM_CriticalPairs(benchmark::State& state) {
  RuleSystem sys = presentation({AlgebraTag::FBMW, 2}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(critical_pairs(sys, 5).pairs.size());
}
BENCHMARK(BM_CriticalPairs);

static void BM_EProjectorIdempotent(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  RuleSystem sys = presentation({AlgebraTag::FBMW, d}, 2);
  Element e1 = e_element(sys.field(), sys.context(), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_identity(e1 * e1, e1, sys).verified);
}
BENCHMARK(BM_EProjectorIdempotent)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
