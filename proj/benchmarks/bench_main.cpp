#include <benchmark/benchmark.h>

#include <random>

#include "cliffa/calculus.hpp"
#include "cliffa/integration.hpp"
#include "cliffa/kernels.hpp"
#include "cliffa/quadrature.hpp"
#include "cliffa/series.hpp"

using namespace cliffa;

namespace {

MultivectorD dense(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  MultivectorD m(n);
  for (Blade b = 0; b < (Blade(1) << n); ++b) m += MultivectorD::blade(n, b, u(rng));
  return m;
}

void BM_GeometricProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  MultivectorD a = dense(n, rng), b = dense(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_GeometricProduct)->DenseRange(3, 8);

void BM_FueterPolynomial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& idx : enumerate_multi_indices(4, d)) benchmark::DoNotOptimize(fueter_polynomial(4, idx));
  }
}
BENCHMARK(BM_FueterPolynomial)->DenseRange(1, 4);

void BM_DiracSymbolic(benchmark::State& state) {
  PolynomialQ p = fueter_polynomial(4, {2, 1, 1}) + times_x(fueter_polynomial(4, {1, 1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(dirac_left(p));
}
BENCHMARK(BM_DiracSymbolic);

void BM_CauchyIntegral(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  auto rule = sphere_rule(3, {0, 0, 0}, 1, res);
  Density f = BoundaryDensity::from_polynomial(fueter_polynomial(3, {1, 1})).eval;
  Point y = {0.2, -0.1, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_integral(f, y, rule));
  state.counters["nodes"] = static_cast<double>(rule.nodes.size());
}
BENCHMARK(BM_CauchyIntegral)->Arg(8)->Arg(16)->Arg(32);

void BM_SingularCauchy(benchmark::State& state) {
  auto rule = sphere_rule(3, {0, 0, 0}, 1, static_cast<int>(state.range(0)));
  Density f = BoundaryDensity::from_polynomial(fueter_polynomial(3, {1, 0})).eval;
  Point z = {0.6, 0.0, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(singular_cauchy(f, z, rule));
}
BENCHMARK(BM_SingularCauchy)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
