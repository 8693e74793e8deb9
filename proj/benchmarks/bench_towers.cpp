#include <benchmark/benchmark.h>

#include "ihara_towers/finite_field.hpp"
#include "ihara_towers/graph.hpp"
#include "ihara_towers/ihara.hpp"
#include "ihara_towers/padic.hpp"
#include "ihara_towers/voltage.hpp"

using namespace ihara_towers;

namespace {

VoltagedGraph bouquet(std::vector<std::int64_t> voltages) {
  std::vector<std::pair<std::size_t, std::size_t>> loops(voltages.size(), {0, 0});
  return VoltagedGraph(build_graph(1, loops), VoltageAssignment(std::move(voltages)));
}

void LayerSpanningTrees(benchmark::State& state) {
  const SerreGraph layer = derived_graph(bouquet({3, 5}), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(layer));
}
BENCHMARK(LayerSpanningTrees)->Arg(20)->Arg(50)->Arg(100);

void PierceLehmerRange(benchmark::State& state) {
  const TowerAnalysis ta = analyze(bouquet({3, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(pierce_lehmer_range(ta.j_poly, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(PierceLehmerRange)->Arg(100)->Arg(500);

void FactorModP(benchmark::State& state) {
  const TowerAnalysis ta = analyze(bouquet({1, 3, 7}));
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(ta.j_poly, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(FactorModP)->Arg(101)->Arg(1000003);

void PadicReport(benchmark::State& state) {
  const TowerAnalysis ta = analyze(bouquet({3, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(padic_report(ta, static_cast<std::uint64_t>(state.range(0)), 200));
}
BENCHMARK(PadicReport)->Arg(2)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
