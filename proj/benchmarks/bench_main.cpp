// Microbenchmarks for the hot paths: exact series multiplication, form
// construction, class-group enumeration, the coefficient bootstrap, and
// high-precision Heegner-sum trace evaluation.

#include <benchmark/benchmark.h>

#include "singmod/arith.hpp"
#include "singmod/forms.hpp"
#include "singmod/jacobi.hpp"
#include "singmod/quadforms.hpp"
#include "singmod/traces.hpp"

#include <map>

using namespace singmod;

namespace {

void bm_series_mul(benchmark::State& state) {
  const long order = state.range(0);
  const QSeries e4 = build_form("E4", order);
  const QSeries e6 = build_form("E6", order);
  for (auto _ : state) {
    QSeries p = series_mul(e4, e6);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(order);
}
BENCHMARK(bm_series_mul)->Range(64, 1024)->Complexity();

void bm_build_j(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state) {
    QSeries j = build_form("j", order);
    benchmark::DoNotOptimize(j);
  }
  state.SetComplexityN(order);
}
BENCHMARK(bm_build_j)->Range(32, 512)->Complexity();

void bm_enumerate_classes(benchmark::State& state) {
  const long dmax = state.range(0);
  for (auto _ : state) {
    long total = 0;
    for (long d = 3; d <= dmax; ++d) {
      if (d % 4 != 0 && d % 4 != 3) continue;
      total += static_cast<long>(enumerate_classes(d).reps.size());
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetComplexityN(dmax);
}
BENCHMARK(bm_enumerate_classes)->Range(64, 1024)->Complexity();

void bm_bootstrap(benchmark::State& state) {
  const long dmax = state.range(0);
  const std::map<long, Rational> singular = {{0, Rational(2)}, {-1, Rational(-1)}};
  for (auto _ : state) {
    JacobiCoeffTable t = bootstrap(1, singular, {0, 1}, dmax);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(dmax);
}
BENCHMARK(bm_bootstrap)->Range(64, 1024)->Complexity();

void bm_trace_closed_form(benchmark::State& state) {
  const long dmax = state.range(0);
  for (auto _ : state) {
    TraceTable t = t1_closed_form(dmax);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(dmax);
}
BENCHMARK(bm_trace_closed_form)->Range(128, 2048)->Complexity();

void bm_numeric_trace(benchmark::State& state) {
  const long d = state.range(0);
  for (auto _ : state) {
    NumericTrace t = numeric_trace(1, false, 1, d, 128);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_numeric_trace)->Arg(23)->Arg(100)->Arg(399);

void bm_hecke_trace(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    Rational t = hecke_trace(24, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_hecke_trace)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
