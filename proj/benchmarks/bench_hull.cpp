#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "shadowcalc/minkowski.hpp"
#include "shadowcalc/shadow.hpp"

namespace {

using shadowcalc::Vec;

std::vector<Vec> random_points(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Vec> pts;
  for (int p = 0; p < count; ++p) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = coord(eng);
    pts.push_back(v);
  }
  return pts;
}

std::vector<Vec> cube(int dim) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return pts;
}

void BM_HullRandom(benchmark::State& state) {
  const auto pts = random_points(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(shadowcalc::hull(pts));
}
BENCHMARK(BM_HullRandom)->ArgsProduct({{2, 3, 4, 5}, {30}})->Args({3, 200});

void BM_HullCube(benchmark::State& state) {
  const auto pts = cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shadowcalc::hull(pts));
}
BENCHMARK(BM_HullCube)->DenseRange(2, 5);

void BM_ShadowArea(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto k = shadowcalc::hull(cube(dim));
  Vec u(dim);
  for (int i = 0; i < dim; ++i) u[i] = 1.0 + 0.1 * i;
  const shadowcalc::Direction d(u);
  for (auto _ : state) benchmark::DoNotOptimize(shadowcalc::shadow_area(k, d));
}
BENCHMARK(BM_ShadowArea)->DenseRange(3, 5);

void BM_ShadowHalfSum(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto k = shadowcalc::hull(cube(dim));
  Vec u(dim);
  for (int i = 0; i < dim; ++i) u[i] = 1.0 + 0.1 * i;
  const shadowcalc::Direction d(u);
  for (auto _ : state) benchmark::DoNotOptimize(shadowcalc::shadow_area_half_sum(k, d));
}
BENCHMARK(BM_ShadowHalfSum)->DenseRange(3, 5);

void BM_MinkowskiSum(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto k = shadowcalc::hull(random_points(dim, 20, 2));
  const auto ball = shadowcalc::ball_approx(dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(shadowcalc::minkowski_sum(k, ball, 0.1));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(2, 4);

}  // namespace
