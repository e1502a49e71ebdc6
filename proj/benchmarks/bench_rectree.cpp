#include <benchmark/benchmark.h>

#include "rectree/analysis.hpp"
#include "rectree/search.hpp"
#include "rectree/somos.hpp"
#include "rectree/tree.hpp"

using namespace rectree;

static void BM_Somos4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto run = somos4({2, 3}, n);
    benchmark::DoNotOptimize(run);
  }
}
BENCHMARK(BM_Somos4)->Arg(30)->Arg(100)->Arg(300);

static void BM_SomosRatioTree(benchmark::State& state) {
  const auto r = make_somos_ratio_quadratic({1, 1});
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = build_tree(r, std::vector<Rational>{Rational(1)}, depth);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_SomosRatioTree)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_SomosRatioTreeMemoized(benchmark::State& state) {
  const auto r = make_somos_ratio_quadratic({1, 1});
  TreeOptions opts;
  opts.memoize = true;
  for (auto _ : state) {
    auto t = build_tree(r, std::vector<Rational>{Rational(1)}, static_cast<int>(state.range(0)), opts);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_SomosRatioTreeMemoized)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_WorkedExampleTree(benchmark::State& state) {
  const auto r = make_first_order(1, 5, 8, 1);
  for (auto _ : state) {
    auto t = build_tree(r, std::vector<Rational>{Rational(1)}, 12);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_WorkedExampleTree)->Unit(benchmark::kMillisecond);

static void BM_Conjecture(benchmark::State& state) {
  for (auto _ : state) {
    auto report = check_conjecture({1, 1}, static_cast<int>(state.range(0)), 20);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Conjecture)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  SearchSpec spec;
  spec.A1 = {-2, 6};
  spec.A2 = {-2, 6};
  spec.B1 = {-2, 9};
  spec.B2 = {-2, 9};
  spec.test_depth = 8;
  for (auto _ : state) {
    auto report = run_search(spec);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Search)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
