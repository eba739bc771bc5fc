#include <benchmark/benchmark.h>

#include "qtoric/constructors.hpp"
#include "qtoric/symmetry.hpp"

using namespace qtoric;

static void BM_PosetAutomorphismsCube(benchmark::State& state) {
  CharPair cube = product_pair(product_pair(simplex_pair(1), simplex_pair(1)), simplex_pair(1));
  for (auto _ : state) benchmark::DoNotOptimize(poset_automorphisms(cube.polytope()));
}
BENCHMARK(BM_PosetAutomorphismsCube);

static void BM_PosetAutomorphismsBlowUp(benchmark::State& state) {
  CharPair m2 = example_m2(static_cast<int>(state.range(0)), [&] {
    std::vector<Int> k;
    for (int i = 0; i < state.range(0) - 2; ++i) k.push_back(i + 2);
    return k;
  }());
  for (auto _ : state) benchmark::DoNotOptimize(poset_automorphisms(m2.polytope()));
}
BENCHMARK(BM_PosetAutomorphismsBlowUp)->Arg(5)->Arg(7)->Arg(9);

static void BM_PairAutomorphismsBlowUp(benchmark::State& state) {
  CharPair m2 = example_m2(static_cast<int>(state.range(0)), [&] {
    std::vector<Int> k;
    for (int i = 0; i < state.range(0) - 2; ++i) k.push_back(i + 2);
    return k;
  }());
  auto auts = poset_automorphisms(m2.polytope());
  for (auto _ : state) benchmark::DoNotOptimize(pair_automorphisms_with(m2, auts, 0));
}
BENCHMARK(BM_PairAutomorphismsBlowUp)->Arg(5)->Arg(7);

static void BM_PairAutomorphismsSimplex(benchmark::State& state) {
  CharPair s = simplex_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_automorphisms(s));
}
BENCHMARK(BM_PairAutomorphismsSimplex)->Arg(3)->Arg(4);
