#include <benchmark/benchmark.h>

#include "gorjdt/enumerator.hpp"
#include "gorjdt/jordan.hpp"
#include "gorjdt/tables.hpp"

using namespace gorjdt;

static void BM_RankMatrix(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  Poly F = eval_template("X^{j-2}YZ+Y^{j-1}Z+Z^j", Side::Dual, j);
  LinearForm ell = parse_linear_form("x+2y-z");
  for (auto _ : state) benchmark::DoNotOptimize(rank_matrix(F, ell));
}
BENCHMARK(BM_RankMatrix)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

static void BM_JordanOracle(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  Poly F = eval_template("X^{j-2}YZ+Y^{j-1}Z+Z^j", Side::Dual, j);
  LinearForm ell = parse_linear_form("x+2y-z");
  for (auto _ : state) benchmark::DoNotOptimize(jordan_oracle(F, ell));
}
BENCHMARK(BM_JordanOracle)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  auto spec = EnumSpec::codim3(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(spec));
}
BENCHMARK(BM_Enumerate)->Args({4, 5})->Args({5, 5})->Args({6, 6})->Args({6, 10})->Unit(benchmark::kMillisecond);

static void BM_VerifyTable(benchmark::State& state) {
  static const char* ids[] = {"T7", "T8", "T11"};
  const char* id = ids[state.range(0)];
  const int j = table(id).j_max;
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(id, {j}));
  state.SetLabel(std::string(id) + " j=" + std::to_string(j));
}
BENCHMARK(BM_VerifyTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
