#include <benchmark/benchmark.h>

#include "tenspec/idealcalc.hpp"

using namespace tenspec;

static void BM_GramDeterminantGeneric(benchmark::State& state) {
  // endomorphism words "ud", "uud", "uudd": dims 2, 6, 24
  static const char* words[] = {"ud", "uud", "uudd"};
  const auto w = wbcat::Word::parse(words[state.range(0)]);
  for (auto _ : state) {
    auto analysis = idealcalc::gram_analysis(w);
    benchmark::DoNotOptimize(analysis);
  }
}
BENCHMARK(BM_GramDeterminantGeneric)->DenseRange(0, 2);

static void BM_TraceRadicalWindow(benchmark::State& state) {
  const auto window = idealcalc::ProbeWindow::words_up_to(state.range(0));
  for (auto _ : state) {
    auto radical = idealcalc::tr_star(window, Rational(1));
    benchmark::DoNotOptimize(radical);
  }
}
BENCHMARK(BM_TraceRadicalWindow)->DenseRange(2, 3);

BENCHMARK_MAIN();
