#include <benchmark/benchmark.h>

#include <bit>

#include "chargenus/catalog.hpp"
#include "chargenus/char_class.hpp"
#include "chargenus/stringy.hpp"

using namespace chargenus;

static void BM_ChiYProjective(benchmark::State& state) {
  const auto x = ring_projective(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_y(x));
}
BENCHMARK(BM_ChiYProjective)->DenseRange(2, 10, 2);

static void BM_RingProjective(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ring_projective(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RingProjective)->Arg(4)->Arg(8);

static void BM_ProductRing(benchmark::State& state) {
  const auto p = ring_projective(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring_product(p, p));
}
BENCHMARK(BM_ProductRing)->DenseRange(1, 3);

static void BM_TwistIdentity(benchmark::State& state) {
  const auto p = ring_projective(2);
  const auto x = ring_product(p, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twist_td1py(hirzebruch_class(x, ClassVariant::Unnormalized), x) ==
                             hirzebruch_class(x, ClassVariant::Normalized));
  }
}
BENCHMARK(BM_TwistIdentity);

static void BM_MilnorHypersurface(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = ring_product(ring_projective(n), ring_projective(n));
  const auto hs = hyperplane_classes(x);
  for (auto _ : state) benchmark::DoNotOptimize(chi_y_hypersurface(x, hs[0] + hs[1]));
}
BENCHMARK(BM_MilnorHypersurface)->DenseRange(1, 3);

static void BM_StringyBlownUpA1(benchmark::State& state) {
  const auto m = models::a1_blown_up();
  for (auto _ : state) benchmark::DoNotOptimize(stringy_report(m));
}
BENCHMARK(BM_StringyBlownUpA1);

static void BM_StringyManyDivisors(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  std::vector<SncDivisor> divs;
  std::map<SncModel::Subset, BiPolyUV> strata;
  for (int i = 0; i < r; ++i) divs.push_back({"D" + std::to_string(i), i % 3});
  for (SncModel::Subset s = 0; s < (1u << r); ++s) strata[s] = BiPolyUV::uv().pow(std::popcount(s) % 3);
  const SncModel m("bench", r, divs, StrataMode::Open, strata);
  for (auto _ : state) benchmark::DoNotOptimize(stringy_E(m));
}
BENCHMARK(BM_StringyManyDivisors)->DenseRange(2, 8, 3);

BENCHMARK_MAIN();
