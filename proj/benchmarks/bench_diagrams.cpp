#include <benchmark/benchmark.h>

#include <random>

#include "tenspec/wbcat.hpp"

using namespace tenspec;
using namespace tenspec::wbcat;

namespace {

WBMorphism dense_endomorphism(const Word& w, const Parameter& param, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  WBMorphism f(w, w, param);
  for (const auto& d : enumerate_diagrams(w, w))
    f.add_term(d, param.from_rational(Rational(coeff(rng))));
  return f;
}

}  // namespace

static void BM_EnumerateDiagrams(benchmark::State& state) {
  const Word w = Word::parse(std::string(state.range(0), 'u') + std::string(state.range(0), 'd'));
  for (auto _ : state) {
    auto diagrams = enumerate_diagrams(w, w);
    benchmark::DoNotOptimize(diagrams);
  }
}
BENCHMARK(BM_EnumerateDiagrams)->DenseRange(1, 3);

static void BM_ComposeGeneric(benchmark::State& state) {
  const Word w = Word::parse(std::string(state.range(0), 'u') + std::string(state.range(0), 'd'));
  const auto f = dense_endomorphism(w, Parameter::generic(), 1);
  const auto g = dense_endomorphism(w, Parameter::generic(), 2);
  for (auto _ : state) {
    auto h = compose(g, f);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ComposeGeneric)->DenseRange(1, 2);

static void BM_TraceClosure(benchmark::State& state) {
  const Word w = Word::parse(std::string(state.range(0), 'u') + std::string(state.range(0), 'd'));
  const auto f = dense_endomorphism(w, Parameter::generic(), 3);
  for (auto _ : state) {
    auto t = trace(f);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TraceClosure)->DenseRange(1, 2);

BENCHMARK_MAIN();
