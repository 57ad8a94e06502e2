#include "confbetti/basis.hpp"
#include "confbetti/differential.hpp"
#include "confbetti/engine.hpp"
#include "confbetti/rank.hpp"

#include <benchmark/benchmark.h>

using namespace confbetti;

namespace {

void BM_EnumerateCell(benchmark::State& state) {
  const auto ring = ring_surface(3);
  GeneratorLayout layout(ring);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cell = enumerate_basis(ring, layout, n / 2, 2, n, true);
    benchmark::DoNotOptimize(cell.data());
  }
}
BENCHMARK(BM_EnumerateCell)->Arg(8)->Arg(12)->Arg(16);

void BM_Assemble(benchmark::State& state) {
  const auto ring = ring_surface(2);
  Differential d(ring);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = d.assemble(n / 2, n / 2, n, true);
    benchmark::DoNotOptimize(m.nonzeros());
  }
}
BENCHMARK(BM_Assemble)->Arg(10)->Arg(14)->Arg(18);

RationalMatrix heavy_matrix(int n) {
  const auto ring = ring_surface(2);
  return assemble_matrix(ring, n / 2, n / 2, n, true);
}

void BM_RankModular(benchmark::State& state) {
  const auto m = heavy_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_modular(m, kPrimaryPrime));
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_RankModular)->Arg(10)->Arg(14)->Arg(18);

void BM_RankExact(benchmark::State& state) {
  const auto m = heavy_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_RankExact)->Arg(10)->Arg(14);

void BM_BettiTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BettiEngine e(ring_cp(3), {.workers = 1});
    benchmark::DoNotOptimize(e.betti_table(1, n_max, 50));
  }
}
BENCHMARK(BM_BettiTable)->Arg(10)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_BettiTableParallel(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    BettiEngine e(ring_surface(2), {.workers = workers});
    e.prefetch(1, 18, 18);
    benchmark::DoNotOptimize(e.betti_table(1, 18, 18));
  }
}
BENCHMARK(BM_BettiTableParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
