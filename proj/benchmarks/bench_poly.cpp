#include <benchmark/benchmark.h>

#include <string>

#include "frontalkit/parse.hpp"
#include "frontalkit/poly.hpp"

using namespace frontalkit;

namespace {

Poly dense_poly(const VarList& vars, unsigned degree) {
  std::string text;
  unsigned c = 1;
  for (const auto& m : monomials_up_to(vars.size(), degree)) {
    Poly t = Poly::term(vars, m, Scalar(c++));
    text += (text.empty() ? "" : " + ") + t.to_string();
  }
  return parse_poly(text, vars);
}

void BM_Multiply(benchmark::State& state) {
  const VarList vars{"x", "y", "z"};
  const Poly a = dense_poly(vars, static_cast<unsigned>(state.range(0)));
  const Poly b = a + Poly(vars, Scalar(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.terms().size());
}
BENCHMARK(BM_Multiply)->DenseRange(2, 8, 2);

void BM_MultiplyTruncated(benchmark::State& state) {
  const VarList vars{"x", "y", "z"};
  const unsigned d = static_cast<unsigned>(state.range(0));
  const Poly a = dense_poly(vars, d);
  for (auto _ : state) benchmark::DoNotOptimize(mul_truncated(a, a, d));
}
BENCHMARK(BM_MultiplyTruncated)->DenseRange(2, 8, 2);

void BM_Power(benchmark::State& state) {
  const VarList vars{"x", "y"};
  const Poly p = parse_poly("x^2 + 2/3*x*y - y^3", vars);
  for (auto _ : state) benchmark::DoNotOptimize(pow(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Power)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
