#include <benchmark/benchmark.h>

#include "frontalkit/algebra.hpp"
#include "frontalkit/corpus.hpp"

using namespace frontalkit;

namespace {

// Multiplicity of the A_k front base germ; the value is k+1.
void BM_MultiplicityAk(benchmark::State& state) {
  const PolyMap f = corpus::a_k_base_germ(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(f));
}
BENCHMARK(BM_MultiplicityAk)->DenseRange(2, 5);

void BM_JetCodimension(benchmark::State& state) {
  const PolyMap f = corpus::a_k_base_germ(3);
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_codimension(f, k));
}
BENCHMARK(BM_JetCodimension)->DenseRange(2, 8, 2);

}  // namespace
