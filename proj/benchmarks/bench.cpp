// Microbenchmarks for the hot paths: encoding generation, unit-propagation
// closure, regular-shape checking, the fast input-completeness families, and
// the lower-bound table.
#include <benchmark/benchmark.h>

#include "pcenc/bounds.hpp"
#include "pcenc/encodings.hpp"
#include "pcenc/structure.hpp"
#include "pcenc/up.hpp"
#include "pcenc/verify.hpp"

using namespace pcenc;

namespace {

void BM_generate_sequential(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sequential_amo(n));
}
BENCHMARK(BM_generate_sequential)->Arg(25)->Arg(100)->Arg(400);

void BM_generate_product(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_amo(n));
}
BENCHMARK(BM_generate_product)->Arg(25)->Arg(100)->Arg(400);

void BM_up_closure_product100(benchmark::State& state) {
  Formula f = product_amo(100).formula();
  PartialAssignment rho{Lit::pos(1)};
  for (auto _ : state) benchmark::DoNotOptimize(up_closure(f, rho));
}
BENCHMARK(BM_up_closure_product100);

void BM_check_regular_product100(benchmark::State& state) {
  Encoding e = product_amo(100);
  for (auto _ : state) benchmark::DoNotOptimize(check_regular(e));
}
BENCHMARK(BM_check_regular_product100);

void BM_input_pc_fast_sequential25(benchmark::State& state) {
  Encoding e = sequential_amo(25);
  FunctionSpec f = FunctionSpec::amo(25);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_input_pc(e, f, /*fast_families=*/true));
}
BENCHMARK(BM_input_pc_fast_sequential25);

void BM_bounds_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds_table(3, 400));
}
BENCHMARK(BM_bounds_table);

void BM_normalize_sequential9(benchmark::State& state) {
  Encoding e = sequential_amo(9);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_to_regular(e));
}
BENCHMARK(BM_normalize_sequential9);

}  // namespace

BENCHMARK_MAIN();
