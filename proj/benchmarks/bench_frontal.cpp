#include <benchmark/benchmark.h>

#include "frontalkit/corpus.hpp"
#include "frontalkit/frontal.hpp"

using namespace frontalkit;

namespace {

void BM_CertifyCorpusEntry(benchmark::State& state, const char* name) {
  const corpus::Entry e = corpus::make_entry(name);
  const FrontalPackage pkg = make_frontal_package(e.base, e.multipliers);
  for (auto _ : state) benchmark::DoNotOptimize(certify_frontal(pkg.map, pkg.conormals));
}
BENCHMARK_CAPTURE(BM_CertifyCorpusEntry, fold, "fold");
BENCHMARK_CAPTURE(BM_CertifyCorpusEntry, swallowtail, "swallowtail");

void BM_BuildPackage(benchmark::State& state) {
  const corpus::Entry e = corpus::make_entry("swallowtail");
  for (auto _ : state) benchmark::DoNotOptimize(make_frontal_package(e.base, e.multipliers));
}
BENCHMARK(BM_BuildPackage);

void BM_ReplayEntry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus::run_entry("cuspidal_edge"));
}
BENCHMARK(BM_ReplayEntry);

}  // namespace
