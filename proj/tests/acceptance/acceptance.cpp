// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epw/decomposition.hpp"
#include "epw/gadgets.hpp"
#include "epw/json.hpp"
#include "epw/minor.hpp"
#include "epw/verify.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace epw;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<Graph> small_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto more = testing::nonisomorphic_graphs(n);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

/// The pairs of the minor-engine comparison: every small pattern against
/// every graph on at most five vertices, then seeded random pairs on six.
std::vector<std::pair<Graph, Graph>> corpus_pairs() {
  const auto patterns = small_graphs(4);
  const auto hosts = small_graphs(5);
  std::vector<std::pair<Graph, Graph>> pairs;
  for (const auto& h : patterns)
    for (const auto& g : hosts) pairs.emplace_back(h, g);
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const auto& h = patterns[rng() % patterns.size()];
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    pairs.emplace_back(h, testing::random_graph(rng, 6, p));
  }
  return pairs;
}

Verdict minor_engine() {
  std::size_t agree = 0, total = 0;
  for (const auto& [h, g] : corpus_pairs()) {
    ++total;
    const auto r = find_expansion(h, g);
    const bool found = r.status == SearchStatus::found;
    const bool sound = !r.embedding || verify_embedding(h, g, *r.embedding);
    if (r.status != SearchStatus::budget_exhausted && sound && found == naive_is_minor_oracle(h, g)) ++agree;
  }
  return {agree == total && total == 936 + 200, std::to_string(agree) + "/" + std::to_string(total) + " pairs agree"};
}

Verdict block_cut_trees() {
  std::mt19937_64 rng(2002);
  std::size_t agree = 0;
  const std::size_t total = 500;
  for (std::size_t i = 0; i < total; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const double p = static_cast<double>(rng() % 700) / 1000.0;
    const auto g = testing::random_connected_graph(rng, n, p);
    const auto t = block_cut_tree(g);
    std::set<std::vector<VertexLabel>> blocks;
    for (const auto& b : t.blocks) blocks.insert(b.vertices);
    const std::set<VertexLabel> cuts(t.cutvertices.begin(), t.cutvertices.end());
    if (blocks == testing::brute_force_blocks(g) && cuts == testing::brute_force_cutvertices(g)) ++agree;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " graphs agree"};
}

/// v-x-w inside a context where v and w have degree 3, so the whole graph is
/// one between-segment.
std::pair<Graph, Graph> path_instance() {
  auto g = Graph::from_lists({"v", "x", "w"}, {make_edge("v", "x"), make_edge("x", "w")});
  auto ctx = Graph::from_lists({"v", "x", "w", "p", "q", "y", "z"},
                               {make_edge("v", "x"), make_edge("x", "w"), make_edge("v", "p"), make_edge("v", "q"),
                                make_edge("w", "y"), make_edge("w", "z")});
  return {g, ctx};
}

struct RobustnessRun {
  Report chorded;
  Report thinned;
  bool witness_ok = false;
  std::vector<bool> chorded_thinnings_hold;
};

RobustnessRun robustness_reports() {
  RobustnessRun run;
  run.chorded = check_gadget_robustness(samples::chorded_cycle(), samples::chorded_cycle_ctx(), 3);
  auto [g, ctx] = path_instance();
  const auto thin = testing::thin_bundle(g_times(g, ctx, 3), 0);
  run.thinned = check_deletion_robustness(g, thin, 2, {}, {}, "gadget-robustness");
  if (run.thinned.witness) {
    const auto reread = witness_from_json(nlohmann::json::parse(to_json(*run.thinned.witness).dump()));
    run.witness_ok = verify_witness(reread);
  }
  const auto gadget = g_times(samples::chorded_cycle(), samples::chorded_cycle_ctx(), 3);
  const auto segments = segment_decomposition(samples::chorded_cycle(), samples::chorded_cycle_ctx()).size();
  for (std::size_t s = 0; s < segments; ++s) {
    const auto report =
        check_deletion_robustness(samples::chorded_cycle(), testing::thin_bundle(gadget, s), 2, {}, {}, "thinned");
    run.chorded_thinnings_hold.push_back(report.outcome == Outcome::holds);
  }
  return run;
}

Verdict gadget_robustness(const RobustnessRun& run) {
  const bool chorded = run.chorded.outcome == Outcome::holds && run.chorded.mode == RunMode::exhaustive;
  const bool thinned = run.thinned.outcome == Outcome::refuted && run.witness_ok;
  std::ostringstream s;
  s << "chorded cycle r=3 " << to_string(run.chorded.outcome) << " (" << to_string(run.chorded.mode) << ", "
    << run.chorded.stats.subsets_checked << " subsets); thinned path bundle " << to_string(run.thinned.outcome)
    << (run.witness_ok ? ", witness re-verified" : ", witness NOT verified");
  return {chorded && thinned, s.str()};
}

Verdict branch_count() {
  const auto fig = check_branch_count(samples::chorded_cycle(), samples::chorded_cycle_ctx(), 3);
  bool ok = fig.outcome == Outcome::holds && fig.details["branch_vertices"] == 2;
  std::mt19937_64 rng(4004);
  std::size_t agree = 0, instances = 0;
  while (instances < 100) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto g = testing::random_connected_graph(rng, n, 0.25);
    // the context adds pendant vertices, which can lift degree-2 vertices to branch vertices
    std::vector<VertexLabel> labels = g.labels();
    std::vector<LabelEdge> edges = g.label_edges();
    const auto extra = rng() % 4;
    for (std::uint64_t i = 0; i < extra; ++i) {
      const auto anchor = g.label(static_cast<int>(rng() % g.order()));
      labels.push_back("ctx" + std::to_string(i));
      edges.push_back(make_edge(anchor, labels.back()));
    }
    const auto ctx = Graph::from_lists(labels, edges);
    if (g.size() == 0 || branch_vertices(g, ctx).empty()) continue;
    const int r = 3 + static_cast<int>(instances % 2);
    ++instances;
    const auto report = check_branch_count(g, ctx, r);
    // compare against a direct degree count as well
    const auto direct = testing::count_degree_at_least(g_times(g, ctx, r), 3);
    if (report.outcome == Outcome::holds && direct == branch_vertices(g, ctx).size()) ++agree;
  }
  ok = ok && agree == instances;
  return {ok, "chorded cycle " + fig.details["branch_vertices"].dump() + " = " + fig.details["degree3_in_gadget"].dump() +
                  "; " + std::to_string(agree) + "/" + std::to_string(instances) + " random instances"};
}

struct ComponentInstance {
  Report gencheck;
  GadgetBuild build;
  Report robustness;
  Report locality;
  PackingResult packing;
};

ComponentInstance component_instance() {
  ComponentInstance out;
  const auto a = complete_graph(4, "a");
  const auto h = samples::disjoint(a, complete_graph(2, "b"));
  const AstarSpec spec{complete_graph(5, "x"), {}, 4, 2};
  out.gencheck = check_generic_counterexample(a, spec);
  out.build = h_star_components(h, a, spec, spec.r);
  out.robustness = check_hstar_robustness(out.build.hstar, h, spec.r);
  out.locality = check_expansion_locality(h, out.build.hstar, a, astar_region(out.build.hstar));
  out.packing = max_edge_disjoint_packing(h, out.build.hstar, 4);
  return out;
}

bool exhaustive_hold(const Report& r) { return r.outcome == Outcome::holds && r.mode == RunMode::exhaustive; }

Verdict theorem1(const ComponentInstance& c) {
  const bool ok = exhaustive_hold(c.gencheck) && exhaustive_hold(c.robustness) && exhaustive_hold(c.locality) &&
                  c.packing.exhaustive && c.packing.count < 4;
  std::ostringstream s;
  s << "H* " << c.build.hstar.order() << "v/" << c.build.hstar.size() << "e; gencheck " << to_string(c.gencheck.outcome)
    << ", robustness " << to_string(c.robustness.outcome) << " (" << c.robustness.stats.subsets_checked
    << " subsets), locality " << to_string(c.locality.outcome) << ", packing " << c.packing.count << " < 4";
  return {ok, s.str()};
}

struct BlockInstance {
  GadgetBuild build;
  Report robustness;
  Report locality;
  PackingResult packing;
  Graph a;
};

BlockInstance block_instance() {
  BlockInstance out;
  GadgetRecipe recipe;
  recipe.mode = GadgetMode::theorem2;
  recipe.h = samples::triangle_pendant();
  recipe.spec = AstarSpec{complete_graph(5, "x"), {{"s", "x1"}}, 4, 2};
  recipe.r = 2;
  recipe.predicate = PropertyPredicate{"contains-K3", complete_graph(3)};
  out.build = h_star_blocks(recipe);
  out.a = Graph::from_lists({"s", "b", "c"}, {make_edge("s", "b"), make_edge("b", "c"), make_edge("s", "c")});
  out.robustness = check_hstar_robustness(out.build.hstar, recipe.h, 2);
  out.locality = check_expansion_locality(recipe.h, out.build.hstar, out.a, astar_region(out.build.hstar));
  out.packing = max_edge_disjoint_packing(recipe.h, out.build.hstar, 4);
  return out;
}

/// K5 plus two pendant edges at one of its vertices.
bool is_k5_with_two_pendants(const Graph& g) {
  if (g.order() != 7 || g.size() != 12) return false;
  std::vector<int> leaves, hubs;
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    if (g.degree(v) == 1) leaves.push_back(v);
    if (g.degree(v) == 6) hubs.push_back(v);
  }
  if (leaves.size() != 2 || hubs.size() != 1) return false;
  std::vector<int> core;
  for (int v = 0; v < static_cast<int>(g.order()); ++v)
    if (g.degree(v) != 1) core.push_back(v);
  for (int leaf : leaves)
    if (g.neighbors(leaf).front() != hubs.front()) return false;
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j)
      if (!g.adjacent(core[i], core[j])) return false;
  return true;
}

Verdict theorem2(const BlockInstance& b) {
  const auto& t = b.build.trace;
  const bool trace_ok = t.a_vertices == std::vector<VertexLabel>{"b", "c", "s"} && t.b.empty() && t.c.empty() &&
                        t.d == std::vector<std::vector<VertexLabel>>{{"d", "s"}};
  const bool shape_ok = is_k5_with_two_pendants(b.build.hstar);
  const bool ok = trace_ok && shape_ok && exhaustive_hold(b.robustness) && exhaustive_hold(b.locality) &&
                  b.packing.exhaustive && b.packing.count < 4;
  std::ostringstream s;
  s << "trace " << (trace_ok ? "A={b,c,s} B=C=none D={d-s}" : "MISMATCH") << ", H* "
    << (shape_ok ? "K5 + 2 pendants" : "MISMATCH") << "; robustness " << to_string(b.robustness.outcome)
    << ", locality " << to_string(b.locality.outcome) << ", packing " << b.packing.count << " < 4";
  return {ok, s.str()};
}

Verdict duality() {
  std::size_t compared = 0, agree = 0;
  for (const auto& [h, g] : corpus_pairs()) {
    const auto packing = max_edge_disjoint_packing(h, g, g.size());
    const auto hitting = min_edge_hitting_set(h, g, g.size());
    if (!packing.exhaustive || hitting.status == SearchStatus::budget_exhausted) continue;
    ++compared;
    // no hitting set within |E(g)| edges means the hitting number is unbounded
    if (hitting.status == SearchStatus::none || hitting.set.size() >= packing.count) ++agree;
  }
  return {agree == compared && compared > 0, std::to_string(agree) + "/" + std::to_string(compared) + " pairs"};
}

std::string reports_json() {
  const auto robust = robustness_reports();
  const auto comp = component_instance();
  const auto block = block_instance();
  ojson all = ojson::array();
  all.push_back(to_json(robust.chorded));
  all.push_back(to_json(robust.thinned));
  all.push_back(to_json(check_branch_count(samples::chorded_cycle(), samples::chorded_cycle_ctx(), 4)));
  all.push_back(to_json(comp.gencheck));
  all.push_back(to_json(comp.build.hstar));
  all.push_back(to_json(comp.build.trace));
  all.push_back(to_json(comp.robustness));
  all.push_back(to_json(comp.locality));
  all.push_back(to_json(block.build.hstar));
  all.push_back(to_json(block.build.trace));
  all.push_back(to_json(block.robustness));
  all.push_back(to_json(block.locality));
  return all.dump();
}

Verdict determinism() {
  const auto first = reports_json();
  const auto second = reports_json();
  return {first == second, std::to_string(first.size()) + " bytes compared"};
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int id, const char* name, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
    std::fflush(stdout);
  };

  criterion(1, "minor engine vs naive oracle", minor_engine);
  criterion(2, "block-cut tree vs brute force", block_cut_trees);
  RobustnessRun robust;
  criterion(3, "gadget robustness", [&] {
    robust = robustness_reports();
    return gadget_robustness(robust);
  });
  std::printf("INFO chorded cycle single-bundle thinnings that still hold at r=3:");
  for (std::size_t s = 0; s < robust.chorded_thinnings_hold.size(); ++s)
    std::printf(" segment %zu %s;", s, robust.chorded_thinnings_hold[s] ? "holds" : "refuted");
  std::printf("\n");
  criterion(4, "branch-count identity", branch_count);
  criterion(5, "component-wise instance", [] { return theorem1(component_instance()); });
  criterion(6, "block-wise instance", [] { return theorem2(block_instance()); });
  criterion(7, "hitting >= packing", duality);
  criterion(8, "deterministic reports", determinism);
  return failures == 0 ? 0 : 1;
}
