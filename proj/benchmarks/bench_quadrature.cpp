#include <benchmark/benchmark.h>

#include "shadowcalc/quadrature.hpp"
#include "shadowcalc/shadow.hpp"

namespace {

using namespace shadowcalc;

void BM_MakeRule(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const RuleKind kind = dim == 2   ? RuleKind::kAngularTrapezoid
                        : dim == 3 ? RuleKind::kFibonacciSphere
                                   : RuleKind::kMonteCarlo;
  for (auto _ : state) benchmark::DoNotOptimize(make_rule(dim, kind, 10000, 42));
}
BENCHMARK(BM_MakeRule)->DenseRange(2, 5);

void BM_IntegrateCosine(benchmark::State& state) {
  const QuadratureRule rule = make_rule(3, RuleKind::kMonteCarlo, 100000, 7);
  const Vec nu{0.0, 0.0, 1.0};
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_scalar(
        rule, [&](const Direction& d) { return std::max(0.0, dot(nu, d.u())); }, workers));
  }
}
BENCHMARK(BM_IntegrateCosine)->Arg(1)->Arg(2)->Arg(4);

void BM_CauchyCube3(benchmark::State& state) {
  const Polytope k = hull(std::vector<Vec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                           {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const QuadratureRule rule = make_rule(3, RuleKind::kFibonacciSphere, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_scalar(rule, [&](const Direction& d) { return shadow_area(k, d); }));
  }
}
BENCHMARK(BM_CauchyCube3)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
