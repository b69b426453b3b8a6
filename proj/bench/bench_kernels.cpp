#include <benchmark/benchmark.h>

#include "wenger/graph.hpp"
#include "wenger/kernels.hpp"

using namespace wenger;

namespace {

// (p, e, m) for the graph kernels, indexed by the benchmark argument.
const FamilySpec kGraphs[] = {
    FamilySpec::linearized(5, 1, 2),
    FamilySpec::linearized(3, 2, 2),
    FamilySpec::linearized(2, 3, 3),
};

const FamilySpec kFamilies[] = {
    FamilySpec::linearized(3, 2, 3),
    FamilySpec::linearized(2, 4, 3),
    FamilySpec::wenger(7, 1, 4),
};

const Adjacency& graph_at(std::int64_t i) {
  static std::vector<std::shared_ptr<const Adjacency>> cache;
  if (cache.empty()) {
    for (const auto& spec : kGraphs) cache.push_back(Graph(spec, BuildMode::materialized).adjacency());
  }
  return *cache[i];
}

template <auto Kernel>
void BM_histogram(benchmark::State& state) {
  const Family fam(kFamilies[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fam));
}

template <auto Kernel>
void BM_graph(benchmark::State& state) {
  const Adjacency& adj = graph_at(state.range(0));
  state.counters["vertices"] = static_cast<double>(adj.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj));
}

template <auto Kernel>
void BM_walks(benchmark::State& state) {
  const Adjacency& adj = graph_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj, 3));
}

}  // namespace

BENCHMARK(BM_histogram<serial::root_histogram>)->Name("root_histogram/serial")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_histogram<parallel::root_histogram>)->Name("root_histogram/parallel")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_graph<serial::eccentricities>)->Name("eccentricities/serial")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_graph<parallel::eccentricities>)->Name("eccentricities/parallel")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_graph<serial::girth>)->Name("girth/serial")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_graph<parallel::girth>)->Name("girth/parallel")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_walks<serial::closed_walks>)->Name("closed_walks/serial")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_walks<parallel::closed_walks>)->Name("closed_walks/parallel")->DenseRange(0, 2)->UseRealTime();

BENCHMARK_MAIN();
