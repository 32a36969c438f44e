#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/oracle.hpp"

using namespace leibniz;

namespace {

Matrix random_rational_matrix(std::size_t n, std::uint32_t seed) {
  Field q = Field::rationals();
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Matrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = q.fraction(num(gen), den(gen));
  return m;
}

} // namespace

static void BM_RrefRationals(benchmark::State &state) {
  Matrix m = random_rational_matrix(state.range(0), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRationals)->Arg(8)->Arg(16)->Arg(24);

static void BM_NullspaceGF3(benchmark::State &state) {
  Field f3 = Field::gf(3);
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> d(0, 2);
  const std::size_t n = state.range(0);
  Matrix m(f3, n / 2, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = f3.integer(d(gen));
  for (auto _ : state)
    benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NullspaceGF3)->Arg(8)->Arg(16)->Arg(32);

static void BM_DerivationAlgebraLei4Q(benchmark::State &state) {
  Field q = Field::rationals();
  LeibnizAlgebra l = lei4(q, q.integer(2)).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(DerivationAlgebra(l));
}
BENCHMARK(BM_DerivationAlgebraLei4Q);

static void BM_DerivationAlgebraHeisenbergGF3(benchmark::State &state) {
  Field f3 = Field::gf(3);
  LeibnizAlgebra l = heisenberg(f3).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(DerivationAlgebra(l));
}
BENCHMARK(BM_DerivationAlgebraHeisenbergGF3);

static void BM_OracleEnumerateLei4GF2(benchmark::State &state) {
  Field f2 = Field::gf(2);
  LeibnizAlgebra l = lei4(f2, f2.one()).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_derivations(l));
}
BENCHMARK(BM_OracleEnumerateLei4GF2);

static void BM_OracleEnumerateHeisenbergGF3(benchmark::State &state) {
  Field f3 = Field::gf(3);
  LeibnizAlgebra l = heisenberg(f3).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_derivations(l));
}
BENCHMARK(BM_OracleEnumerateHeisenbergGF3);

static void BM_UpperCentralSeriesLei5(benchmark::State &state) {
  Field q = Field::rationals();
  LeibnizAlgebra l = lei5(q, q.integer(2)).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(l.upper_central_series());
}
BENCHMARK(BM_UpperCentralSeriesLei5);

static void BM_LeibnizIdentityCheck(benchmark::State &state) {
  Field f3 = Field::gf(3);
  LeibnizAlgebra l = heisenberg(f3).algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(l.leibniz_counterexample());
}
BENCHMARK(BM_LeibnizIdentityCheck);

BENCHMARK_MAIN();
