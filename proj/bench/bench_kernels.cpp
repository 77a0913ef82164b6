// Serial reference vs OpenMP kernels. Both sides produce identical exact
// results; only wall time differs.
#include <benchmark/benchmark.h>

#include "rquant/families.hpp"
#include "rquant/formal_diffeo.hpp"
#include "rquant/mpoly.hpp"
#include "rquant/quantizer.hpp"

using namespace rquant;

namespace {

// (1 + x + y + z + w/2)^k, dense enough that the product has many terms.
MPoly dense(int k) {
  const MPoly base = MPoly(1) + MPoly::variable("x") + MPoly::variable("y") + MPoly::variable("z") +
                     MPoly::variable("w") * Rat(1, 2);
  MPoly p(1);
  for (int i = 0; i < k; ++i) p = p * base;
  return p;
}

void BM_mul_serial(benchmark::State& st) {
  const MPoly a = dense(static_cast<int>(st.range(0)));
  const MPoly b = dense(static_cast<int>(st.range(0)) + 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_serial(a.terms(), b.terms()));
  st.counters["terms"] = static_cast<double>(a.terms().size() * b.terms().size());
}

void BM_mul_parallel(benchmark::State& st) {
  const MPoly a = dense(static_cast<int>(st.range(0)));
  const MPoly b = dense(static_cast<int>(st.range(0)) + 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_parallel(a.terms(), b.terms()));
  st.counters["terms"] = static_cast<double>(a.terms().size() * b.terms().size());
}

FormalDiffeo matrix_R(int order) { return algebra_R(AlgebraSpec::matrices2({1, 0, 0, 1}), order); }

void BM_compose_serial(benchmark::State& st) {
  const auto R = matrix_R(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(detail::fd_compose_serial(R, R));
}

void BM_compose_parallel(benchmark::State& st) {
  const auto R = matrix_R(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(fd_compose(R, R));
}

void BM_quantize_matrix(benchmark::State& st) {
  const auto r = algebra_r(AlgebraSpec::matrices2({1, 0, 0, 1}));
  for (auto _ : st) benchmark::DoNotOptimize(quantize(r, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_mul_serial)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_compose_serial)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compose_parallel)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_quantize_matrix)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
