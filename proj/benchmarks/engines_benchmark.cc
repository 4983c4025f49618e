#include <vector>

#include "benchmark/benchmark.h"

#include "twobridge/cfrac.hpp"
#include "twobridge/jones.hpp"
#include "twobridge/snake.hpp"

namespace {

using twobridge::EvenCF;
using twobridge::Integer;
using twobridge::PositiveCF;

// [2, -2, 2, -2, ...] with `m` entries.
EvenCF alternating_even(int m) {
  std::vector<Integer> b;
  for (int i = 0; i < m; ++i) b.emplace_back(i % 2 == 0 ? 2 : -2);
  return EvenCF(b);
}

// [3, 3, ..., 3] with `n` entries.
PositiveCF threes(int n) { return PositiveCF(std::vector<Integer>(n, Integer(3))); }

void BM_JonesRecursive(benchmark::State& state) {
  EvenCF cf = alternating_even(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::jones_recursive(cf));
}
BENCHMARK(BM_JonesRecursive)->RangeMultiplier(2)->Range(4, 64);

void BM_JonesViaF(benchmark::State& state) {
  EvenCF cf = alternating_even(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::jones_via_f(cf));
}
BENCHMARK(BM_JonesViaF)->RangeMultiplier(2)->Range(4, 64);

void BM_JonesDirect(benchmark::State& state) {
  PositiveCF cf = threes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::jones_direct(cf));
}
BENCHMARK(BM_JonesDirect)->RangeMultiplier(2)->Range(4, 64);

void BM_CountMatchings(benchmark::State& state) {
  twobridge::SnakeGraph g = twobridge::snake_from_positive(threes(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::count_matchings(g));
}
BENCHMARK(BM_CountMatchings)->RangeMultiplier(4)->Range(4, 1024);

// Enumeration is exponential in the tile count; keep the graphs small.
void BM_FPolynomial(benchmark::State& state) {
  twobridge::SnakeGraph g = twobridge::snake_from_positive(threes(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::f_polynomial(g));
}
BENCHMARK(BM_FPolynomial)->DenseRange(2, 6, 2);

void BM_EvenCf(benchmark::State& state) {
  // Ratios of consecutive Pell numbers; one of p, q is always even.
  twobridge::Rat r = PositiveCF(std::vector<Integer>(state.range(0), Integer(2))).value();
  for (auto _ : state) benchmark::DoNotOptimize(twobridge::even_cf(r));
}
BENCHMARK(BM_EvenCf)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
