#include <benchmark/benchmark.h>

#include "epw/decomposition.hpp"
#include "epw/gadgets.hpp"
#include "epw/minor.hpp"
#include "epw/verify.hpp"

namespace {

epw::Graph grid(int w, int h) {
  std::vector<epw::VertexLabel> vs;
  std::vector<epw::LabelEdge> es;
  auto name = [](int x, int y) { return std::to_string(x) + "." + std::to_string(y); };
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      vs.push_back(name(x, y));
      if (x + 1 < w) es.push_back(epw::make_edge(name(x, y), name(x + 1, y)));
      if (y + 1 < h) es.push_back(epw::make_edge(name(x, y), name(x, y + 1)));
    }
  }
  return epw::Graph::from_lists(vs, es);
}

void BM_FindK4InGrid(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  const auto host = grid(side, side);
  const auto k4 = epw::complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(epw::find_expansion(k4, host));
}
BENCHMARK(BM_FindK4InGrid)->Arg(3)->Arg(4)->Arg(5);

void BM_K5NotInGrid(benchmark::State& state) {
  // grids are planar, so the search runs to exhaustion
  const auto host = grid(3, static_cast<int>(state.range(0)));
  const auto k5 = epw::complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(epw::find_expansion(k5, host));
}
BENCHMARK(BM_K5NotInGrid)->Arg(2)->Arg(3);

void BM_BlockCutTree(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(epw::block_cut_tree(g));
}
BENCHMARK(BM_BlockCutTree)->Arg(8)->Arg(32);

void BM_PackTrianglesInK(benchmark::State& state) {
  const auto host = epw::complete_graph(static_cast<int>(state.range(0)));
  const auto k3 = epw::complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(epw::max_edge_disjoint_packing(k3, host, host.size()));
}
BENCHMARK(BM_PackTrianglesInK)->Arg(5)->Arg(6);

void BM_GadgetRobustness(benchmark::State& state) {
  const auto g = epw::Graph::from_lists({"v", "w", "u1", "u2", "w1"},
                                        {epw::make_edge("v", "w"), epw::make_edge("w", "w1"), epw::make_edge("v", "u1"),
                                         epw::make_edge("u1", "u2"), epw::make_edge("u2", "w")});
  auto ctx_labels = g.labels();
  ctx_labels.push_back("u");
  auto ctx_edges = g.label_edges();
  ctx_edges.push_back(epw::make_edge("u", "v"));
  const auto ctx = epw::Graph::from_lists(ctx_labels, ctx_edges);
  epw::Budget budget;
  budget.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epw::check_gadget_robustness(g, ctx, 3, budget));
}
BENCHMARK(BM_GadgetRobustness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
