/// @file bench_geodint.cpp
/// @brief Microbenchmarks for the hot paths: the assembled series routes
///        (the product), the quadrature oracle (the reference they replace),
///        coefficient table generation, and the inverse solve.

#include <benchmark/benchmark.h>

#include "geodint/inverse.hpp"
#include "geodint/kappa.hpp"
#include "geodint/quadrature.hpp"
#include "geodint/series.hpp"

namespace {

const geodint::Ellipsoid kEll = geodint::make_ellipsoid(1.0, 0.08182);

geodint::GeodesicSpec standard_spec(int order) {
  geodint::GeodesicSpec spec;
  spec.c = 0.5;
  spec.h = 1e-3;
  spec.tau1 = 0.4;
  spec.order = order;
  return spec;
}

void BM_longitude_series(benchmark::State& state) {
  const geodint::GeodesicSpec spec = standard_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodint::longitude_integral(kEll, spec).value);
  }
}
BENCHMARK(BM_longitude_series)->Arg(2)->Arg(8)->Arg(16);

void BM_distance_series(benchmark::State& state) {
  const geodint::GeodesicSpec spec = standard_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodint::distance_integral(kEll, spec).value);
  }
}
BENCHMARK(BM_distance_series)->Arg(8);

void BM_longitude_oracle(benchmark::State& state) {
  const geodint::GeodesicSpec spec = standard_spec(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodint::quad_longitude(kEll, spec));
  }
}
BENCHMARK(BM_longitude_oracle);

void BM_kappa_table(benchmark::State& state) {
  const int smax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodint::kappa_table(smax).rows.size());
  }
}
BENCHMARK(BM_kappa_table)->Arg(9)->Arg(16);

void BM_solve_c(benchmark::State& state) {
  const geodint::GeodesicSpec spec = standard_spec(8);
  const double target = geodint::longitude_integral(kEll, spec).value;
  geodint::InverseProblem prob;
  prob.target = target;
  prob.tau1 = spec.tau1;
  prob.h = spec.h;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodint::solve_c(prob, kEll).c);
  }
}
BENCHMARK(BM_solve_c);

}  // namespace

BENCHMARK_MAIN();
