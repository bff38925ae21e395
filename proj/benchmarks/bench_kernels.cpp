#include "atnlab/choose.hpp"
#include "atnlab/factor.hpp"
#include "atnlab/orient.hpp"
#include "atnlab/poly.hpp"

#include <benchmark/benchmark.h>

#include <array>

using namespace atnlab;

namespace {

void report(benchmark::State& state, const WorkStats& w) {
  state.counters["term_mults"] = static_cast<double>(w.term_mults);
  state.counters["peak_terms"] = static_cast<double>(w.peak_terms);
  state.counters["subsets"] = static_cast<double>(w.subsets);
  state.counters["nodes"] = static_cast<double>(w.search_nodes);
}

void BM_PolyAtnCompleteBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = complete_bipartite(n, n);
  WorkStats w;
  for (auto _ : state) {
    w = {};
    benchmark::DoNotOptimize(atn_via_polynomial(g, {}, &w));
  }
  report(state, w);
}
BENCHMARK(BM_PolyAtnCompleteBipartite)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PolyAtnLineK4(benchmark::State& state) {
  const Graph g = line_graph(complete_graph(4));
  WorkStats w;
  for (auto _ : state) {
    w = {};
    benchmark::DoNotOptimize(atn_via_polynomial(g, {}, &w));
  }
  report(state, w);
}
BENCHMARK(BM_PolyAtnLineK4)->Unit(benchmark::kMillisecond);

void BM_PolyAtnTotalK4(benchmark::State& state) {
  const Graph g = total_graph(complete_graph(4));
  WorkStats w;
  for (auto _ : state) {
    w = {};
    benchmark::DoNotOptimize(atn_via_polynomial(g, {}, &w));
  }
  report(state, w);
}
BENCHMARK(BM_PolyAtnTotalK4)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_FullExpansion(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_polynomial(g, std::nullopt).terms().size());
}
BENCHMARK(BM_FullExpansion)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ParityEulerianCirculant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Orientation o = eulerian_orientation(circulant_bipartite(n, 4));
  WorkStats w;
  for (auto _ : state) {
    w = {};
    benchmark::DoNotOptimize(eulerian_parity_diff(o, {}, &w));
  }
  report(state, w);
}
BENCHMARK(BM_ParityEulerianCirculant)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ParityMultipartite(benchmark::State& state) {
  const Orientation o = paper_orientation_multipartite(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_parity_diff(o));
}
BENCHMARK(BM_ParityMultipartite);

void BM_OrientAtn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = complete_bipartite(n, n);
  WorkStats w;
  for (auto _ : state) {
    w = {};
    benchmark::DoNotOptimize(atn_via_orientations(g, {}, &w).atn);
  }
  report(state, w);
}
BENCHMARK(BM_OrientAtn)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ChoosableK33(benchmark::State& state) {
  const Graph g = complete_bipartite(3, 3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_choosable(g, k).verdict);
}
BENCHMARK(BM_ChoosableK33)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ChoosableK222(benchmark::State& state) {
  const std::array<int, 3> parts{2, 2, 2};
  const Graph g = complete_multipartite(parts);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_choosable(g, 3).verdict);
}
BENCHMARK(BM_ChoosableK222)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
BENCHMARK_MAIN();
