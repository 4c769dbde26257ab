#include <benchmark/benchmark.h>

#include <random>

#include "landau/extremal.hpp"
#include "landau/kernels.hpp"
#include "landau/verify.hpp"

namespace {

using landau::Complex;

struct Sample {
  std::vector<Complex> points;
  std::vector<Complex> values;
};

Sample make_sample(int radial, int angular) {
  const landau::DerivAll b(2.0, {1.0});
  const auto F = landau::as_poly_analytic(landau::F1Family{b});
  Sample s;
  s.points = landau::verify::polar_grid(0.26, landau::verify::GridSpec(radial, angular));
  s.values = landau::kernels::map_points_serial(s.points, [&](Complex z) { return poly_eval(F, z); });
  return s;
}

void BM_MinPairRatioSerial(benchmark::State& state) {
  const auto s = make_sample(int(state.range(0)), 2 * int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(landau::kernels::min_pair_ratio_serial(s.points, s.values));
  state.SetComplexityN(std::int64_t(s.points.size()));
}

void BM_MinPairRatioParallel(benchmark::State& state) {
  const auto s = make_sample(int(state.range(0)), 2 * int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(landau::kernels::min_pair_ratio(s.points, s.values));
  state.SetComplexityN(std::int64_t(s.points.size()));
}

void BM_MinDistanceSerial(benchmark::State& state) {
  const auto s = make_sample(int(state.range(0)), 4 * int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(landau::kernels::min_distance_serial(s.values));
}

void BM_MinDistanceParallel(benchmark::State& state) {
  const auto s = make_sample(int(state.range(0)), 4 * int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(landau::kernels::min_distance(s.values));
}

}  // namespace

BENCHMARK(BM_MinPairRatioSerial)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_MinPairRatioParallel)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_MinDistanceSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_MinDistanceParallel)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
