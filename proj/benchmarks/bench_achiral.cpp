#include <benchmark/benchmark.h>

#include "achiral/census.hpp"
#include "achiral/diagram.hpp"
#include "achiral/diagram_builder.hpp"
#include "achiral/plangraph.hpp"
#include "achiral/realize.hpp"

namespace dg = achiral::diagrams;

namespace {

// (2 2 ... 2) with k entries; 2k crossings.
std::vector<std::int64_t> twos(std::int64_t k) { return std::vector<std::int64_t>(static_cast<std::size_t>(k), 2); }

}  // namespace

static void BM_Goeritz(benchmark::State& state) {
  const auto d = dg::compile_rational(twos(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dg::det(d, dg::DetMethod::Goeritz));
}
BENCHMARK(BM_Goeritz)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

static void BM_MonocyclicStates(benchmark::State& state) {
  const auto d = dg::compile_rational(twos(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dg::monocyclic_state_count(d));
}
BENCHMARK(BM_MonocyclicStates)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_SpanningTrees(benchmark::State& state) {
  const auto g = dg::checkerboard_graph(dg::compile_rational(twos(state.range(0))), dg::Color::Black);
  for (auto _ : state) benchmark::DoNotOptimize(achiral::plangraph::spanning_tree_count(g));
}
BENCHMARK(BM_SpanningTrees)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

static void BM_RealizeAchiral(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(achiral::realize::realize_achiral(n));
}
BENCHMARK(BM_RealizeAchiral)->Arg(5)->Arg(45)->Arg(985)->Arg(1885);

static void BM_RationalCount(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(achiral::census::count_rational_by_det(n));
}
BENCHMARK(BM_RationalCount)->Arg(985)->Arg(99999);
BENCHMARK_MAIN();
