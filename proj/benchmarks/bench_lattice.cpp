#include <benchmark/benchmark.h>

#include <random>

#include "qtoric/lattice.hpp"

using namespace qtoric;

namespace {

IntMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<Int>(rng() % 7) - 3;
  return m;
}

}  // namespace

static void BM_Det(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(3)->Arg(5)->Arg(8);

static void BM_SolveAgainstBasis(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<CharVector> basis, images;
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    basis.push_back(CharVector::normalized(e));
    std::vector<Int> img(n, 1);
    img[i] = i + 2;
    images.push_back(CharVector::normalized(img));
    signs.push_back(i % 2 == 0 ? 1 : -1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_against_basis(basis, images, signs));
}
BENCHMARK(BM_SolveAgainstBasis)->Arg(3)->Arg(5)->Arg(7);

static void BM_SaturatedSpan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<CharVector> vectors;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Int> v(n, 0);
    v[i] = 2;
    v[i + 1] = 3;
    vectors.push_back(CharVector::normalized(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(saturated_span(vectors, n));
}
BENCHMARK(BM_SaturatedSpan)->Arg(4)->Arg(6)->Arg(8);
