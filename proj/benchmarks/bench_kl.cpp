#include <benchmark/benchmark.h>

#include "mkl/algebra.hpp"
#include "mkl/families.hpp"
#include "mkl/kl.hpp"
#include "mkl/matroid_spec.hpp"

namespace {

void BM_GenericBraid(benchmark::State& state) {
  const auto lat = mkl::build_lattice(mkl::BraidSpec{state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(mkl::kl_poly(lat));
  state.counters["flats"] = static_cast<double>(lat.size());
}
BENCHMARK(BM_GenericBraid)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_GenericUniform(benchmark::State& state) {
  const auto lat = mkl::build_lattice(mkl::UniformSpec{2, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(mkl::kl_poly(lat));
  state.counters["flats"] = static_cast<double>(lat.size());
}
BENCHMARK(BM_GenericUniform)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildBraidLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mkl::build_lattice(mkl::BraidSpec{state.range(0)}));
}
BENCHMARK(BM_BuildBraidLattice)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_UniformClosedForms(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 0; i <= 3; ++i) benchmark::DoNotOptimize(mkl::uniform_coeff_closed(3, state.range(0), i));
  }
}
BENCHMARK(BM_UniformClosedForms)->Arg(50)->Arg(400);

void BM_GeneratingFunctionBraid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mkl::gf_check_braid(state.range(0)));
}
BENCHMARK(BM_GeneratingFunctionBraid)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// braid_kl memoizes, so after the first iteration this measures the cache lookup.
void BM_BraidFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mkl::braid_kl(state.range(0)));
}
BENCHMARK(BM_BraidFamily)->Arg(20);

void BM_PositivityScan(benchmark::State& state) {
  const auto lat = mkl::build_lattice(mkl::BraidSpec{state.range(0)});
  for (auto _ : state) {
    const mkl::MobiusAlgebra alg(lat);
    benchmark::DoNotOptimize(alg.positivity_scan());
  }
}
BENCHMARK(BM_PositivityScan)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EpsProductFastVsDefinition(benchmark::State& state) {
  const mkl::MobiusAlgebra alg(mkl::build_lattice(mkl::UniformSpec{2, 4}));
  const mkl::AlgebraElement a{{0, mkl::LaurentPoly::monomial(1, 0)}};
  const bool fast = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast ? alg.multiply_fast(a, a) : alg.multiply(a, a));
  }
}
BENCHMARK(BM_EpsProductFastVsDefinition)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
