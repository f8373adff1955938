#include "schubres/bott.hpp"
#include "schubres/geometry.hpp"
#include "schubres/partition.hpp"
#include "schubres/resolution.hpp"
#include "schubres/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace schubres;

static void BM_ClosedForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(jpw_closed_form(n, k));
}
BENCHMARK(BM_ClosedForm)->Args({3, 1})->Args({5, 2})->Args({7, 3})->Args({8, 2});

static void BM_EnlargedSpaceAssemble(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  auto xi = std::get<XiDescription>(build_xi_description(n, k, n));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(xi_oracle(xi), xi.max_t()));
}
BENCHMARK(BM_EnlargedSpaceAssemble)->Args({4, 2})->Args({5, 2})->Args({6, 4});

static void BM_Bott(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = i < n / 2 ? 2 * n : 0;  // needs n^2/4 exchanges
  QDominantWeight w(n, n / 2, lam);
  for (auto _ : state) benchmark::DoNotOptimize(bott(w));
}
BENCHMARK(BM_Bott)->Arg(4)->Arg(8)->Arg(16);

static void BM_SchurDim(benchmark::State& state) {
  Partition p({8, 6, 6, 4, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(schur_dim(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchurDim)->Arg(6)->Arg(12);

static void BM_PluckerMinor(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ZMatrix x = ZMatrix::identity(2 * n);
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j < i; ++j)
      if (is_free_coordinate_HQ(n, 2, n - 1, i, j)) x(i - 1, j - 1) = (i * 7 + j * 3) % 5 - 2;
  for (auto _ : state) benchmark::DoNotOptimize(plucker_minor(n, 2, n - 1, 2 * n, n, x));
}
BENCHMARK(BM_PluckerMinor)->Arg(4)->Arg(5);

static void BM_WMaxSmoothness(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeylElementC w = WeylElementC::from_full_word(w_max_rep(n, 2, n - 1).word());
  auto B = ParabolicMarker::borel(RootSystem::C, n);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dim_at_id(w, B));
}
BENCHMARK(BM_WMaxSmoothness)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
