#include <benchmark/benchmark.h>

#include <cmath>

#include "ptkdv/conserved.hpp"
#include "ptkdv/numerics.hpp"
#include "ptkdv/profile.hpp"
#include "ptkdv/specfun.hpp"
#include "ptkdv/stability.hpp"
#include "ptkdv/variational.hpp"

using namespace ptkdv;

static void BM_ln_gamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_gamma(x));
    x += 0.1;
    if (x > 40.0) x = 0.1;
  }
}
BENCHMARK(BM_ln_gamma);

static void BM_inc_beta(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inc_beta(0.75, 0.75, x));
    x += 0.05;
    if (x > 0.95) x = 0.05;
  }
}
BENCHMARK(BM_inc_beta);

static void BM_gauss_2f1(benchmark::State& state) {
  double z = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_2f1(0.25, 0.25, 1.25, z));
    z += 0.05;
    if (z > 0.99) z = 0.05;
  }
}
BENCHMARK(BM_gauss_2f1);

static void BM_jacobi_elliptic(benchmark::State& state) {
  double u = 0.0;
  const double k = std::sqrt(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_elliptic(u, k));
    u += 0.01;
    if (u > 3.0) u = 0.0;
  }
}
BENCHMARK(BM_jacobi_elliptic);

static void BM_quadrature_smooth(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate([](double x) { return std::sin(x) * std::exp(-x); }, 0.0, 3.0, 1e-11));
  }
}
BENCHMARK(BM_quadrature_smooth);

static void BM_quadrature_endpoint_singular(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(
        [](double x) { return std::pow(1.0 - x * x * x * x, -0.25); }, 0.0, 1.0, 1e-11));
  }
}
BENCHMARK(BM_quadrature_endpoint_singular);

static void BM_z_of_y(benchmark::State& state) {
  const double yh = z_halfwidth(2.0, 4);
  double y = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_of_y(2.0, 4, y));
    y += yh / 64.0;
    if (y > yh) y = 0.0;
  }
}
BENCHMARK(BM_z_of_y);

static void BM_build_profile(benchmark::State& state) {
  const ModelParams mp = make_params(state.range(0) == 0 ? 3 : 6,
                                     state.range(0) == 0 ? 1 : 2,
                                     state.range(0) == 0 ? 2 : 4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_profile(mp, 256));
}
BENCHMARK(BM_build_profile)->Arg(0)->Arg(1);

static void BM_conserved_quadrature(benchmark::State& state) {
  const auto prof = build_profile(make_params(5, 1, 4, 1), 128);
  for (auto _ : state) benchmark::DoNotOptimize(conserved_quadrature(prof));
}
BENCHMARK(BM_conserved_quadrature);

static void BM_goldstone(benchmark::State& state) {
  const auto prof = build_profile(make_params(3, 1, 2, 1), 256);
  for (auto _ : state) benchmark::DoNotOptimize(goldstone_residual(prof));
}
BENCHMARK(BM_goldstone);

static void BM_variational_post_gaussian(benchmark::State& state) {
  const ModelParams mp = make_params(3, 1, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_post_gaussian(mp, 1.0));
}
BENCHMARK(BM_variational_post_gaussian);

BENCHMARK_MAIN();
