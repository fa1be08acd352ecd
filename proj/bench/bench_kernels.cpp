// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "iqf/gauss.hpp"
#include "iqf/moment.hpp"
#include "iqf/primary.hpp"
#include "iqf/symbols.hpp"

using namespace iqf;

namespace {

// (x / n)_2 modulo an element of norm about 10^5
const Elem& big_modulus() {
  static const Elem n = canonical_primary(Elem(-1, 315, 142)).second;
  return n;
}

void BM_gauss_direct_parallel(benchmark::State& st) {
  omp_set_num_threads(int(st.range(0)));
  DenominatorSymbol chi(big_modulus(), 2);
  Elem k = Elem::integer(-1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(gauss_direct(k, chi, big_modulus()));
  st.counters["threads"] = double(st.range(0));
}

void BM_gauss_direct_serial(benchmark::State& st) {
  DenominatorSymbol chi(big_modulus(), 2);
  Elem k = Elem::integer(-1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(gauss_direct_serial(k, chi, big_modulus()));
}

MomentConfig bench_config(bool serial) {
  MomentConfig c;
  c.d = -1;
  c.j = 2;
  c.alpha = 0.25;
  c.serial = serial;
  return c;
}

void BM_moment_parallel(benchmark::State& st) {
  omp_set_num_threads(int(st.range(0)));
  MomentConfig c = bench_config(false);
  TestFunction phi = TestFunction::bump();
  for (auto _ : st) benchmark::DoNotOptimize(lhs_quadratic(c, 200, phi));
  st.counters["threads"] = double(st.range(0));
}

void BM_moment_serial(benchmark::State& st) {
  MomentConfig c = bench_config(true);
  TestFunction phi = TestFunction::bump();
  lhs_quadratic(c, 200, phi);  // fill the ideal and Gauss sum caches outside the timing
  for (auto _ : st) benchmark::DoNotOptimize(lhs_quadratic(c, 200, phi));
}

}  // namespace

BENCHMARK(BM_gauss_direct_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gauss_direct_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moment_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moment_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
