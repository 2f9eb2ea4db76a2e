#include <benchmark/benchmark.h>

#include "wcurve/classnum.hpp"
#include "wcurve/modular.hpp"
#include "wcurve/topology.hpp"

using namespace wcurve;

namespace {

void bm_class_number(benchmark::State& state) {
  std::int64_t C = -4 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(class_number(C));
}
BENCHMARK(bm_class_number)->Arg(1000)->Arg(10000)->Arg(100000);

void bm_prototypes(benchmark::State& state) {
  Discriminant D = discriminant_split(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_prototypes(D));
}
BENCHMARK(bm_prototypes)->Arg(76)->Arg(2000)->Arg(41385);

void bm_invariants(benchmark::State& state) {
  Discriminant D = discriminant_split(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_invariants(D));
}
BENCHMARK(bm_invariants)->Arg(44)->Arg(1997)->Arg(41388);

void bm_cusp_count(benchmark::State& state) {
  Discriminant D = discriminant_split(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cusp_count_wd(D));
}
BENCHMARK(bm_cusp_count)->Arg(44)->Arg(1997)->Arg(41388);

void bm_fd_polynomial(benchmark::State& state) {
  Discriminant D = discriminant_split(state.range(0));
  BigComplexCtx ctx(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fd_polynomial(D, ctx));
}
BENCHMARK(bm_fd_polynomial)
    ->Args({76, 256})
    ->Args({92, 256})
    ->Args({92, 512});

void bm_theta(benchmark::State& state) {
  BigComplexCtx ctx(static_cast<unsigned>(state.range(0)));
  BigComplex tau{BigFloat(0), BigFloat(1) / 2};
  for (auto _ : state) benchmark::DoNotOptimize(a_of_tau(ctx, tau));
}
BENCHMARK(bm_theta)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
