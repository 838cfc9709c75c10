#include <benchmark/benchmark.h>

#include "tenspec/idealcalc.hpp"
#include "tenspec/supereval.hpp"

using namespace tenspec;

static void BM_KernelBasis(benchmark::State& state) {
  const auto w = wbcat::Word::parse(state.range(0) == 0 ? "uu" : "uud");
  for (auto _ : state) {
    auto kernel = supereval::kernel_basis(w, w, 2, 1);
    benchmark::DoNotOptimize(kernel);
  }
}
BENCHMARK(BM_KernelBasis)->DenseRange(0, 1);

static void BM_FunctorKernelWindow(benchmark::State& state) {
  const auto window = idealcalc::ProbeWindow::words_up_to(state.range(0));
  for (auto _ : state) {
    auto ideal = idealcalc::functor_kernel_ideal(1, 0, window);
    benchmark::DoNotOptimize(ideal);
  }
}
BENCHMARK(BM_FunctorKernelWindow)->DenseRange(2, 3);

static void BM_GenerateIdealFromStrand(benchmark::State& state) {
  const auto window = idealcalc::ProbeWindow::words_up_to(state.range(0));
  const auto gen = wbcat::WBMorphism::identity(wbcat::Word::parse("u"),
                                               wbcat::Parameter::at(Rational(0)));
  for (auto _ : state) {
    auto ideal = idealcalc::generate_ideal({gen}, window);
    benchmark::DoNotOptimize(ideal);
  }
}
BENCHMARK(BM_GenerateIdealFromStrand)->DenseRange(1, 2);

BENCHMARK_MAIN();
