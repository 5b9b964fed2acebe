#include <benchmark/benchmark.h>

#include "hypercris/deligne_illusie.hpp"
#include "hypercris/kedlaya.hpp"
#include "hypercris/wach.hpp"

using namespace hypercris;

// ring arithmetic in W(F_{p^n})/p^N
static void BM_ZqMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ZqRing R = ZqRing::create(5, n, 10);
  ZqElement a = R.generator() + R.from_int(3), b = a.sigma() + R.one();
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ZqMul)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_ZqInverse(benchmark::State& state) {
  ZqRing R = ZqRing::create(7, static_cast<int>(state.range(0)), 8);
  ZqElement a = R.generator() + R.from_int(2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ZqInverse)->Arg(1)->Arg(4);

static void BM_PolyMul(benchmark::State& state) {
  ZqRing R = ZqRing::create(5, 1, 10);
  const int d = static_cast<int>(state.range(0));
  std::vector<int64_t> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = 3 * k + 1;
  Poly f = Poly::from_ints(R, c);
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
  state.SetComplexityN(d);
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_KedlayaFrobenius(benchmark::State& state) {
  HyperellipticCurve X = curve_family_member(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filtered_frobenius(X, 2));
}
BENCHMARK(BM_KedlayaFrobenius)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DeligneIllusie(benchmark::State& state) {
  HyperellipticCurve X = curve_family_member(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(di_matrix(X));
}
BENCHMARK(BM_DeligneIllusie)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DeligneIllusieByP(benchmark::State& state) {
  HyperellipticCurve X = curve_family_member(static_cast<uint64_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(di_matrix(X));
}
BENCHMARK(BM_DeligneIllusieByP)->Arg(5)->Arg(11)->Arg(23)->Arg(47)->Unit(benchmark::kMillisecond);

// devissage only; the Frobenius data is prepared outside the loop
static void BM_GammaMatrix(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0)), i = 2, j = static_cast<int>(state.range(1));
  HyperellipticCurve X = curve_family_member(5, g);
  FilteredFrobeniusData ff = filtered_frobenius(X, gamma_working_precision(i, j));
  for (auto _ : state) benchmark::DoNotOptimize(compute_gamma_matrix(ff, i, j));
}
BENCHMARK(BM_GammaMatrix)->Args({2, 2})->Args({4, 2})->Args({8, 2})->Args({2, 4})->Args({2, 8})->Unit(benchmark::kMillisecond);

static void BM_SStructure(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_s_structure(5, 1, 8, M));
}
BENCHMARK(BM_SStructure)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
