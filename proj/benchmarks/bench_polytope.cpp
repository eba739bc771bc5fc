#include <benchmark/benchmark.h>

#include "qtoric/constructors.hpp"
#include "qtoric/polytope.hpp"

using namespace qtoric;

static void BM_FaceLattice(benchmark::State& state) {
  CharPair m2 = example_m2(static_cast<int>(state.range(0)), [&] {
    std::vector<Int> k;
    for (int i = 0; i < state.range(0) - 2; ++i) k.push_back(i + 2);
    return k;
  }());
  for (auto _ : state) benchmark::DoNotOptimize(build_face_lattice(m2.polytope()));
}
BENCHMARK(BM_FaceLattice)->Arg(5)->Arg(7);

static void BM_Validate(benchmark::State& state) {
  CharPair m2 = example_m2(7, {2, 3, 4, 5, 6});
  PolytopeData data{m2.rank(), m2.polytope().facet_count(), m2.polytope().vertices()};
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::checked(data));
}
BENCHMARK(BM_Validate);

static void BM_FacetSubpolytope(benchmark::State& state) {
  CharPair m2 = example_m2(7, {2, 3, 4, 5, 6});
  for (auto _ : state)
    for (int f = 0; f < m2.polytope().facet_count(); ++f)
      benchmark::DoNotOptimize(facet_subpolytope(m2.polytope(), f));
}
BENCHMARK(BM_FacetSubpolytope);
