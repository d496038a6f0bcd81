#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "teichlab/teichlab.hpp"

namespace tl = teichlab;

static void BM_Distance(benchmark::State& state) {
  const tl::Modulus k(0.5);
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> c(-1.9, 1.9);
  std::vector<tl::BlockPoint> pts(1024);
  for (auto& p : pts) p = {c(gen), c(gen)};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::distance(pts[i % 1024], pts[(i + 1) % 1024], k));
    ++i;
  }
}
BENCHMARK(BM_Distance);

static void BM_ValidateSigma(benchmark::State& state) {
  const auto s = tl::sigma_prescribed(0.5, -0.5, tl::Modulus(0.5), {.seed = 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::validate_sigma(s, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ValidateSigma)->Arg(1000)->Arg(10000);

static void BM_AngleNumeric(benchmark::State& state) {
  const tl::Modulus k(0.5);
  const auto a = tl::standard_segment(tl::kBasePoint, tl::kMuPoint, k);
  const auto b = tl::sigma_segment(tl::sigma_prescribed(0.7, 0.2, k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::angle_numeric(a, b, tl::kMuPoint));
  }
}
BENCHMARK(BM_AngleNumeric);

static void BM_Synthesize(benchmark::State& state) {
  tl::TriangleSpec spec;
  spec.side_length = std::log(3.0) / 2;
  spec.theta = {std::numbers::pi / 2, std::numbers::pi / 3, std::numbers::pi / 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::synthesize(spec));
  }
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMillisecond);

static void BM_CurvatureProbe(benchmark::State& state) {
  const tl::Modulus k(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::curvature_probe(k));
  }
}
BENCHMARK(BM_CurvatureProbe);

BENCHMARK_MAIN();
