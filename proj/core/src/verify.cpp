#include "epw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "epw/json.hpp"
#include "search_engine.hpp"
#include "subsets.hpp"

namespace epw {
namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool same_graph(const Graph& a, const Graph& b) { return a.labels() == b.labels() && a.edges() == b.edges(); }

std::vector<bool> removal_flags(std::size_t m, const std::vector<int>& subset) {
  std::vector<bool> removed(m, false);
  for (int e : subset) removed[static_cast<std::size_t>(e)] = true;
  return removed;
}

/// Size uniform in [0, max_size], then a uniform subset of that size.
std::vector<int> sample_subset(std::mt19937_64& rng, std::size_t m, std::size_t max_size) {
  const std::size_t size = static_cast<std::size_t>(rng() % (std::min(max_size, m) + 1));
  std::vector<int> pool(m);
  for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (m - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct Verdict {
  SearchStatus status = SearchStatus::none;
  std::uint64_t nodes = 0;
};

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds: return "holds";
    case Outcome::refuted: return "refuted";
    case Outcome::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

std::string to_string(RunMode mode) { return mode == RunMode::exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(MinorOp op) {
  switch (op) {
    case MinorOp::delete_edge: return "delete-edge";
    case MinorOp::contract_edge: return "contract-edge";
    case MinorOp::delete_vertex: return "delete-vertex";
  }
  return "?";
}

Graph apply_minor_step(const Graph& g, const MinorStep& step) {
  std::vector<VertexLabel> vertices;
  std::set<LabelEdge> edges;
  switch (step.op) {
    case MinorOp::delete_edge:
      return delete_edges(g, {make_edge(step.u, step.v)});
    case MinorOp::delete_vertex: {
      g.index(step.u);
      for (const auto& v : g.labels()) {
        if (v != step.u) vertices.push_back(v);
      }
      for (const auto& e : g.label_edges()) {
        if (e.u != step.u && e.v != step.u) edges.insert(e);
      }
      break;
    }
    case MinorOp::contract_edge: {
      if (!g.adjacent(g.index(step.u), g.index(step.v))) {
        throw GraphError("cannot contract non-edge " + step.u + " " + step.v);
      }
      for (const auto& v : g.labels()) {
        if (v != step.v) vertices.push_back(v);
      }
      for (const auto& e : g.label_edges()) {
        auto a = e.u == step.v ? step.u : e.u;
        auto b = e.v == step.v ? step.u : e.v;
        if (a != b) edges.insert(make_edge(a, b));
      }
      break;
    }
  }
  return Graph::from_lists(std::move(vertices), {edges.begin(), edges.end()});
}

bool verify_witness(const Witness& w, std::uint64_t node_budget) {
  try {
    if (w.kind == "deletion") {
      const auto rest = delete_edges(w.host, w.deleted);
      return find_expansion(w.pattern, rest, w.constraints, node_budget).status == SearchStatus::none;
    }
    if (w.kind == "embedding") {
      return w.embeddings.size() == 1 && verify_embedding(w.pattern, w.host, w.embeddings[0]) &&
             satisfies(w.host, w.embeddings[0], w.constraints);
    }
    if (w.kind == "packing") {
      if (w.embeddings.size() < w.expected) return false;
      std::set<LabelEdge> used;
      for (const auto& m : w.embeddings) {
        if (!verify_embedding(w.pattern, w.host, m)) return false;
        for (const auto& e : m.footprint()) {
          if (!used.insert(e).second) return false;
        }
      }
      return true;
    }
    if (w.kind == "minor-sequence") {
      if (find_expansion(w.pattern, w.host, {}, node_budget).status != SearchStatus::none) return false;
      Graph g = w.host;
      for (const auto& s : w.steps) g = apply_minor_step(g, s);
      return find_expansion(w.pattern, g, {}, node_budget).status == SearchStatus::found;
    }
    if (w.kind == "branch-count") {
      const auto expanded = g_times(w.host, w.context, w.r);
      std::size_t observed = 0;
      for (int v = 0; v < static_cast<int>(expanded.order()); ++v) observed += expanded.degree(v) >= 3 ? 1 : 0;
      const auto expected = branch_vertices(w.host, w.context).size();
      return observed == w.observed && expected == w.expected && observed != expected;
    }
  } catch (const GraphError&) {
    return false;
  }
  return false;
}

ojson to_json(const Witness& w) {
  ojson j;
  j["kind"] = w.kind;
  j["pattern"] = to_json(w.pattern);
  j["host"] = to_json(w.host);
  if (w.kind == "branch-count") {
    j["context"] = to_json(w.context);
    j["r"] = w.r;
    j["expected"] = w.expected;
    j["observed"] = w.observed;
  }
  if (w.kind == "deletion") j["deleted"] = to_json(w.deleted);
  if (!w.constraints.empty()) j["constraints"] = to_json(w.constraints);
  if (!w.embeddings.empty()) {
    ojson list = ojson::array();
    for (const auto& m : w.embeddings) list.push_back(to_json(m));
    j["embeddings"] = list;
  }
  if (w.kind == "packing") j["expected"] = w.expected;
  if (w.kind == "minor-sequence") {
    ojson steps = ojson::array();
    for (const auto& s : w.steps) {
      ojson step = {{"op", to_string(s.op)}, {"u", s.u}};
      if (s.op != MinorOp::delete_vertex) step["v"] = s.v;
      steps.push_back(step);
    }
    j["steps"] = steps;
  }
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  try {
    w.kind = j.at("kind").get<std::string>();
    w.pattern = graph_from_json(j.at("pattern"));
    w.host = graph_from_json(j.at("host"));
    if (j.contains("context")) w.context = graph_from_json(j.at("context"));
    if (j.contains("r")) w.r = j.at("r").get<int>();
    if (j.contains("expected")) w.expected = j.at("expected").get<std::size_t>();
    if (j.contains("observed")) w.observed = j.at("observed").get<std::size_t>();
    if (j.contains("deleted")) w.deleted = edges_from_json(j.at("deleted"));
    if (j.contains("constraints")) w.constraints = constraints_from_json(j.at("constraints"));
    if (j.contains("embeddings")) {
      for (const auto& m : j.at("embeddings")) w.embeddings.push_back(embedding_from_json(m));
    }
    if (j.contains("steps")) {
      for (const auto& s : j.at("steps")) {
        MinorStep step;
        const auto op = s.at("op").get<std::string>();
        if (op == "delete-edge") step.op = MinorOp::delete_edge;
        else if (op == "contract-edge") step.op = MinorOp::contract_edge;
        else if (op == "delete-vertex") step.op = MinorOp::delete_vertex;
        else throw GraphError("unknown minor operation '" + op + "'");
        step.u = s.at("u").get<std::string>();
        if (s.contains("v")) step.v = s.at("v").get<std::string>();
        w.steps.push_back(step);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed witness JSON: ") + e.what());
  }
  return w;
}

ojson to_json(const Report& r) {
  ojson j;
  j["claim"] = r.claim;
  j["outcome"] = to_string(r.outcome);
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["stats"] = {{"subsets_checked", r.stats.subsets_checked}, {"search_nodes", r.stats.search_nodes}};
  j["details"] = r.details;
  j["witness"] = r.witness ? to_json(*r.witness) : ojson(nullptr);
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.claim << ": " << to_string(r.outcome);
  if (r.outcome == Outcome::holds && r.mode == RunMode::sampled) out << " (no counterexample found, not a proof)";
  out << "\n  mode: " << to_string(r.mode);
  if (r.mode == RunMode::sampled) out << " (seed " << r.seed << ", " << r.trials << " trials)";
  else out << " (" << r.trials << " cases)";
  out << "\n  subsets checked: " << r.stats.subsets_checked << "\n  search nodes: " << r.stats.search_nodes
      << "\n  elapsed: " << static_cast<long long>(r.stats.elapsed_ms) << " ms\n";
  for (const auto& [key, value] : r.details.items()) out << "  " << key << ": " << value.dump() << "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out << "  witness (" << w.kind << ")";
    if (w.kind == "deletion") {
      out << ": X = {";
      for (std::size_t i = 0; i < w.deleted.size(); ++i) out << (i ? ", " : "") << w.deleted[i].u << "-" << w.deleted[i].v;
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

Report check_deletion_robustness(const Graph& pattern, const Graph& host, int max_deleted,
                                 const EmbeddingConstraints& constraints, const Budget& budget, std::string claim) {
  Stopwatch clock;
  Report report;
  report.claim = std::move(claim);
  report.seed = budget.seed;
  const std::size_t d = max_deleted < 0 ? 0 : static_cast<std::size_t>(max_deleted);
  const std::size_t m = host.size();
  const auto total = detail::subsets_up_to(m, d);
  const bool sampled = budget.force_sample || total > budget.subsets;
  report.mode = sampled ? RunMode::sampled : RunMode::exhaustive;
  report.details["pattern_order"] = pattern.order();
  report.details["host_order"] = host.order();
  report.details["host_size"] = m;
  report.details["max_deleted"] = d;
  report.details["subsets_total"] = total;

  const auto p = detail::make_pattern(pattern);
  const auto ic = detail::resolve_constraints(pattern, host, constraints);
  detail::make_host(host);  // rejects oversized hosts before any work

  auto evaluate = [&](const std::vector<int>& subset) {
    auto r = detail::search(p, detail::make_host(host, removal_flags(m, subset)), ic, budget.nodes);
    return Verdict{r.status, r.nodes};
  };

  std::mt19937_64 rng(budget.seed);
  detail::SubsetCursor cursor(m, d);
  const std::uint64_t limit = sampled ? budget.samples : total;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, budget.jobs)) * 64;
  std::uint64_t produced = 0;
  std::vector<std::vector<int>> items;

  while (produced < limit) {
    items.clear();
    std::vector<int> subset;
    while (items.size() < batch && produced < limit) {
      if (sampled) {
        items.push_back(sample_subset(rng, m, d));
      } else {
        if (!cursor.next(subset)) break;
        items.push_back(subset);
      }
      ++produced;
    }
    if (items.empty()) break;
    const auto verdicts = detail::parallel_map<std::vector<int>, Verdict>(items, budget.jobs, evaluate);
    for (std::size_t i = 0; i < items.size(); ++i) {
      ++report.stats.subsets_checked;
      report.stats.search_nodes += verdicts[i].nodes;
      if (verdicts[i].status == SearchStatus::found) continue;
      if (verdicts[i].status == SearchStatus::none) {
        report.outcome = Outcome::refuted;
        Witness w;
        w.kind = "deletion";
        w.pattern = pattern;
        w.host = host;
        for (int e : items[i]) w.deleted.push_back(host.label_edge(e));
        w.deleted = normalize(std::move(w.deleted));
        w.constraints = constraints;
        report.witness = std::move(w);
      } else {
        report.outcome = Outcome::budget_exhausted;
      }
      report.trials = report.stats.subsets_checked;
      report.stats.elapsed_ms = clock.ms();
      return report;
    }
  }
  report.trials = report.stats.subsets_checked;
  report.stats.elapsed_ms = clock.ms();
  return report;
}

Report check_gadget_robustness(const Graph& g, const Graph& ctx, int r, const Budget& budget) {
  const auto gadget = g_times(g, ctx, r);
  auto report = check_deletion_robustness(g, gadget, r - 1, {}, budget, "gadget-robustness");
  report.details["r"] = r;
  return report;
}

Report check_hstar_robustness(const Graph& hstar, const Graph& h, int r, const Budget& budget) {
  auto report = check_deletion_robustness(h, hstar, r - 1, {}, budget, "hstar-robustness");
  report.details["r"] = r;
  return report;
}

Report check_expansion_locality(const Graph& h, const Graph& hstar, const Graph& a,
                                const std::vector<VertexLabel>& region, const Budget& budget) {
  Stopwatch clock;
  Report report;
  report.claim = "expansion-locality";
  report.seed = budget.seed;
  for (const auto& v : region) {
    if (!hstar.contains(v)) throw GraphError("region vertex '" + v + "' is not a vertex of hstar");
  }

  // Copies of `a` inside h: the components (or blocks) that contain it as a minor.
  std::vector<std::vector<VertexLabel>> groups;
  std::string granularity;
  const auto comps = connected_components(h);
  const bool is_component = std::any_of(comps.begin(), comps.end(), [&](const Graph& c) { return same_graph(c, a); });
  auto consider = [&](const Graph& piece) {
    if (same_graph(piece, a)) {
      groups.push_back(piece.labels());
      return;
    }
    auto r = find_expansion(a, piece, {}, budget.nodes);
    report.stats.search_nodes += r.nodes;
    if (r.status == SearchStatus::budget_exhausted) throw GraphError("locality: budget exhausted while classifying");
    if (r.status == SearchStatus::found) groups.push_back(piece.labels());
  };
  if (is_component) {
    granularity = "component";
    for (const auto& c : comps) consider(c);
  } else {
    granularity = "block";
    bool found_block = false;
    for (const auto& c : comps) {
      for (const auto& b : block_cut_tree(c).blocks) {
        const auto bg = b.graph();
        found_block = found_block || same_graph(bg, a);
        consider(bg);
      }
    }
    if (!found_block) throw GraphError("a is neither a component nor a block of h");
  }
  report.details["granularity"] = granularity;
  report.details["groups"] = groups;
  report.details["region_size"] = region.size();

  // One representative per group, deduplicated as vertex sets.
  std::set<std::vector<VertexLabel>> choices{{}};
  for (const auto& group : groups) {
    std::set<std::vector<VertexLabel>> next;
    for (const auto& partial : choices) {
      for (const auto& v : group) {
        auto extended = partial;
        if (std::find(extended.begin(), extended.end(), v) == extended.end()) extended.push_back(v);
        std::sort(extended.begin(), extended.end());
        next.insert(std::move(extended));
      }
    }
    choices = std::move(next);
    if (choices.size() > budget.subsets) {
      report.outcome = Outcome::budget_exhausted;
      report.stats.elapsed_ms = clock.ms();
      return report;
    }
  }
  report.details["representative_sets"] = choices.size();

  for (const auto& chosen : choices) {
    EmbeddingConstraints c;
    for (const auto& x : chosen) c.forbidden_region[x] = region;
    ++report.stats.subsets_checked;
    auto r = find_expansion(h, hstar, c, budget.nodes);
    report.stats.search_nodes += r.nodes;
    if (r.status == SearchStatus::none) continue;
    if (r.status == SearchStatus::found) {
      report.outcome = Outcome::refuted;
      Witness w;
      w.kind = "embedding";
      w.pattern = h;
      w.host = hstar;
      w.constraints = std::move(c);
      w.embeddings.push_back(*r.embedding);
      report.witness = std::move(w);
    } else {
      report.outcome = Outcome::budget_exhausted;
    }
    break;
  }
  report.trials = report.stats.subsets_checked;
  report.stats.elapsed_ms = clock.ms();
  return report;
}

Report check_generic_counterexample(const Graph& a, const AstarSpec& spec, const Budget& budget) {
  Stopwatch clock;
  EmbeddingConstraints rooted;
  for (const auto& [s, target] : spec.roots) {
    if (!a.contains(s)) throw GraphError("root '" + s + "' is not a vertex of a");
    if (!spec.astar.contains(target)) throw GraphError("root target '" + target + "' is not a vertex of A*");
    rooted.must_contain[s] = target;
  }

  const auto packing = max_edge_disjoint_packing(a, spec.astar, static_cast<std::size_t>(spec.k), budget);
  Report report;
  ojson packing_details = {{"cap", spec.k}, {"count", packing.count}, {"exhaustive", packing.exhaustive},
                           {"minimal_footprints", packing.minimal_footprints}};
  if (packing.count >= static_cast<std::size_t>(spec.k)) {
    report.claim = "generic-counterexample";
    report.seed = budget.seed;
    report.outcome = Outcome::refuted;
    report.stats.search_nodes = packing.nodes;
    report.details["packing"] = packing_details;
    report.details["failed_part"] = "packing";
    Witness w;
    w.kind = "packing";
    w.pattern = a;
    w.host = spec.astar;
    w.embeddings = packing.witness;
    w.expected = static_cast<std::size_t>(spec.k);
    report.witness = std::move(w);
    report.stats.elapsed_ms = clock.ms();
    return report;
  }

  report = check_deletion_robustness(a, spec.astar, spec.r - 1, rooted, budget, "generic-counterexample");
  report.stats.search_nodes += packing.nodes;
  report.details["packing"] = packing_details;
  report.details["k"] = spec.k;
  report.details["r"] = spec.r;
  if (!packing.exhaustive && report.outcome == Outcome::holds) report.outcome = Outcome::budget_exhausted;
  if (report.outcome == Outcome::refuted) report.details["failed_part"] = "rooted-robustness";
  report.stats.elapsed_ms = clock.ms();
  return report;
}

Report check_branch_count(const Graph& g, const Graph& ctx, int r) {
  if (r < 3) throw GraphError("branch count identity needs r >= 3");
  Stopwatch clock;
  const auto expanded = g_times(g, ctx, r);
  std::size_t observed = 0;
  for (int v = 0; v < static_cast<int>(expanded.order()); ++v) observed += expanded.degree(v) >= 3 ? 1 : 0;
  const auto expected = branch_vertices(g, ctx).size();

  Report report;
  report.claim = "branch-count";
  report.trials = 1;
  report.details["r"] = r;
  report.details["branch_vertices"] = expected;
  report.details["degree3_in_gadget"] = observed;
  if (observed != expected) {
    report.outcome = Outcome::refuted;
    Witness w;
    w.kind = "branch-count";
    w.host = g;
    w.context = ctx;
    w.r = r;
    w.expected = expected;
    w.observed = observed;
    report.witness = std::move(w);
  }
  report.stats.elapsed_ms = clock.ms();
  return report;
}

Report check_hereditary_sampled(const PropertyPredicate& pred, const std::vector<Graph>& corpus,
                                std::uint64_t trials, std::uint64_t seed, const Budget& budget) {
  Stopwatch clock;
  Report report;
  report.claim = "hereditary";
  report.mode = RunMode::sampled;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  auto has_property = [&](const Graph& g) -> std::optional<bool> {
    auto r = find_expansion(pred.minor, g, {}, budget.nodes);
    report.stats.search_nodes += r.nodes;
    if (r.status == SearchStatus::budget_exhausted) return std::nullopt;
    return r.status == SearchStatus::found;
  };

  std::size_t skipped = 0;
  for (const auto& start : corpus) {
    auto initial = has_property(start);
    if (!initial) {
      report.outcome = Outcome::budget_exhausted;
      break;
    }
    if (*initial) {
      ++skipped;
      continue;
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
      ++report.trials;
      Graph g = start;
      std::vector<MinorStep> steps;
      const auto length = 1 + rng() % (start.order() + start.size());
      for (std::uint64_t s = 0; s < length && !g.empty(); ++s) {
        MinorStep step;
        const auto kind = g.size() == 0 ? 2 : rng() % 3;
        if (kind == 2) {
          step.op = MinorOp::delete_vertex;
          step.u = g.label(static_cast<int>(rng() % g.order()));
        } else {
          const auto e = g.label_edge(static_cast<int>(rng() % g.size()));
          step.op = kind == 0 ? MinorOp::delete_edge : MinorOp::contract_edge;
          step.u = e.u;
          step.v = e.v;
        }
        g = apply_minor_step(g, step);
        steps.push_back(step);
        ++report.stats.subsets_checked;
        auto holds = has_property(g);
        if (!holds) {
          report.outcome = Outcome::budget_exhausted;
          report.stats.elapsed_ms = clock.ms();
          return report;
        }
        if (*holds) {
          report.outcome = Outcome::refuted;
          Witness w;
          w.kind = "minor-sequence";
          w.pattern = pred.minor;
          w.host = start;
          w.steps = std::move(steps);
          report.witness = std::move(w);
          report.details["predicate"] = pred.name;
          report.stats.elapsed_ms = clock.ms();
          return report;
        }
      }
    }
  }
  report.details["predicate"] = pred.name;
  report.details["corpus"] = corpus.size();
  report.details["skipped"] = skipped;
  report.stats.elapsed_ms = clock.ms();
  return report;
}

}  // namespace epw
