#include <benchmark/benchmark.h>

#include "frontalkit/parse.hpp"
#include "frontalkit/ramification.hpp"

using namespace frontalkit;

namespace {

PolyMap swallowtail_base() {
  const VarList v{"x", "y"};
  return PolyMap(v, {parse_poly("3/4*x^4 + x^2*y", v), parse_poly("y", v)});
}

void BM_GradientModule(benchmark::State& state) {
  const PolyMap f = swallowtail_base();
  const Poly psi = parse_poly("x^5 + 5/9*x^3*y", f.source());
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gradient_module_membership(psi, f, k));
}
BENCHMARK(BM_GradientModule)->DenseRange(4, 12, 4);

void BM_JsqPlusPullback(benchmark::State& state) {
  const PolyMap f = swallowtail_base();
  const Poly psi = parse_poly("x^5 + 5/9*x^3*y", f.source());
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jsq_plus_pullback_membership(psi, f, k));
}
BENCHMARK(BM_JsqPlusPullback)->DenseRange(4, 12, 4);

}  // namespace
