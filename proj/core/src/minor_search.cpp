#include <algorithm>
#include <climits>
#include <numeric>

#include "epw/decomposition.hpp"
#include "search_engine.hpp"

namespace epw {
namespace detail {

HostGraph make_host(const Graph& g) { return make_host(g, std::vector<bool>{}); }

HostGraph make_host(const Graph& g, Mask edge_keep) {
  if (g.size() > 64) throw GraphError("edge masks support at most 64 edges");
  std::vector<bool> removed(g.size(), false);
  for (std::size_t e = 0; e < g.size(); ++e) removed[e] = !(edge_keep & bit(static_cast<int>(e)));
  return make_host(g, removed);
}

HostGraph make_host(const Graph& g, const std::vector<bool>& removed) {
  if (g.order() > kMaxSearchVertices) {
    throw GraphError("expansion search supports hosts with at most 64 vertices");
  }
  HostGraph host;
  host.n = static_cast<int>(g.order());
  host.adj.assign(g.order(), 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (e < removed.size() && removed[e]) continue;
    const auto& edge = g.edges()[e];
    host.adj[static_cast<std::size_t>(edge.u)] |= bit(edge.v);
    host.adj[static_cast<std::size_t>(edge.v)] |= bit(edge.u);
  }
  return host;
}

PatternGraph make_pattern(const Graph& h) {
  if (h.order() > kMaxSearchVertices) throw GraphError("pattern graphs support at most 64 vertices");
  PatternGraph p;
  p.k = static_cast<int>(h.order());
  p.adj.assign(h.order(), 0);
  for (const auto& e : h.edges()) {
    p.adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    p.adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
    p.edges.emplace_back(e.u, e.v);
  }
  return p;
}

IndexConstraints resolve_constraints(const Graph& h, const Graph& g, const EmbeddingConstraints& c) {
  IndexConstraints ic;
  ic.must.assign(h.order(), -1);
  ic.forbidden.assign(h.order(), 0);
  auto pattern_vertex = [&](const VertexLabel& x) {
    auto i = h.find(x);
    if (!i) throw GraphError("constraint names unknown pattern vertex '" + x + "'");
    return static_cast<std::size_t>(*i);
  };
  auto host_vertex = [&](const VertexLabel& v) {
    auto i = g.find(v);
    if (!i) throw GraphError("constraint names unknown host vertex '" + v + "'");
    return *i;
  };
  for (const auto& [x, v] : c.must_contain) ic.must[pattern_vertex(x)] = host_vertex(v);
  const Mask all = g.order() == 64 ? ~Mask{0} : bit(static_cast<int>(g.order())) - 1;
  for (const auto& [x, region] : c.allowed_region) {
    Mask allowed = 0;
    for (const auto& v : region) allowed |= bit(host_vertex(v));
    ic.forbidden[pattern_vertex(x)] |= all & ~allowed;
  }
  for (const auto& [x, region] : c.forbidden_region) {
    for (const auto& v : region) ic.forbidden[pattern_vertex(x)] |= bit(host_vertex(v));
  }
  return ic;
}

namespace {

// Branch sets grow from canonical anchors: an unconstrained pattern vertex x
// is anchored at the smallest host vertex of its final branch set, so every
// smaller vertex is forbidden for x. Growth happens only to satisfy a pattern
// edge whose two branch sets are not yet adjacent; each growth branch
// forbids the moves tried by its earlier siblings, so branches never overlap.
class Searcher {
 public:
  Searcher(const PatternGraph& h, const HostGraph& g, const IndexConstraints& c, std::uint64_t budget)
      : h_(h), g_(g), must_(c.must), forbidden_(c.forbidden), budget_(budget) {
    sets_.assign(static_cast<std::size_t>(h.k), 0);
    placed_.assign(static_cast<std::size_t>(h.k), false);
    host_degree_.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) host_degree_[static_cast<std::size_t>(v)] = std::popcount(g.adj[static_cast<std::size_t>(v)]);
    plan_order();
  }

  RawResult run() {
    RawResult r;
    if (h_.k > g_.n) {
      r.status = SearchStatus::none;
      return r;
    }
    const bool ok = dfs();
    r.nodes = nodes_;
    if (ok) {
      r.status = SearchStatus::found;
      r.sets = sets_;
    } else {
      r.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::none;
    }
    return r;
  }

 private:
  // Pattern vertices with a must-contain target go first, then greedily the
  // vertex with most placed neighbors, breaking ties by degree.
  void plan_order() {
    std::vector<bool> chosen(static_cast<std::size_t>(h_.k), false);
    Mask placed_mask = 0;
    for (int step = 0; step < h_.k; ++step) {
      int best = -1;
      std::tuple<int, int, int> best_key{-1, -1, -1};
      for (int x = 0; x < h_.k; ++x) {
        if (chosen[static_cast<std::size_t>(x)]) continue;
        const Mask adj = h_.adj[static_cast<std::size_t>(x)];
        std::tuple<int, int, int> key{must_[static_cast<std::size_t>(x)] >= 0 ? 1 : 0,
                                      std::popcount(adj & placed_mask), std::popcount(adj)};
        if (best == -1 || key > best_key) {
          best = x;
          best_key = key;
        }
      }
      chosen[static_cast<std::size_t>(best)] = true;
      placed_mask |= bit(best);
      order_.push_back(best);
    }
  }

  Mask free_vertices() const { return g_.all() & ~used_; }

  bool satisfied(int x, int y) const {
    return (g_.neighborhood(sets_[static_cast<std::size_t>(x)]) & sets_[static_cast<std::size_t>(y)]) != 0;
  }

  // Can the two branch sets still be joined through free vertices that may
  // legally join one of them?
  bool connectable(int x, int y) const {
    const Mask target = sets_[static_cast<std::size_t>(y)];
    const Mask passable =
        free_vertices() & ~(forbidden_[static_cast<std::size_t>(x)] & forbidden_[static_cast<std::size_t>(y)]);
    Mask reach = sets_[static_cast<std::size_t>(x)];
    while (true) {
      const Mask nb = g_.neighborhood(reach);
      if (nb & target) return true;
      const Mask fresh = nb & passable & ~reach;
      if (!fresh) return false;
      reach |= fresh;
    }
  }

  bool unplaced_feasible() const {
    const Mask free = free_vertices();
    int unplaced = 0;
    for (int x = 0; x < h_.k; ++x) {
      if (placed_[static_cast<std::size_t>(x)]) continue;
      ++unplaced;
      if (!(free & ~forbidden_[static_cast<std::size_t>(x)])) return false;
    }
    return unplaced <= std::popcount(free);
  }

  void add(int x, int v) {
    sets_[static_cast<std::size_t>(x)] |= bit(v);
    used_ |= bit(v);
  }
  void remove(int x, int v) {
    sets_[static_cast<std::size_t>(x)] &= ~bit(v);
    used_ &= ~bit(v);
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }

    // Most constrained unsatisfied pattern edge between placed vertices.
    int bx = -1, by = -1;
    int best = INT_MAX;
    Mask best_mx = 0, best_my = 0;
    const Mask free = free_vertices();
    for (const auto& [x, y] : h_.edges) {
      if (!placed_[static_cast<std::size_t>(x)] || !placed_[static_cast<std::size_t>(y)] || satisfied(x, y)) continue;
      const Mask mx = g_.neighborhood(sets_[static_cast<std::size_t>(x)]) & free & ~forbidden_[static_cast<std::size_t>(x)];
      const Mask my = g_.neighborhood(sets_[static_cast<std::size_t>(y)]) & free & ~forbidden_[static_cast<std::size_t>(y)];
      const int moves = std::popcount(mx) + std::popcount(my);
      if (moves == 0 || !connectable(x, y)) return false;
      if (moves < best) {
        best = moves;
        bx = x;
        by = y;
        best_mx = mx;
        best_my = my;
      }
    }

    if (bx != -1) {
      const Mask saved_x = forbidden_[static_cast<std::size_t>(bx)];
      const Mask saved_y = forbidden_[static_cast<std::size_t>(by)];
      bool found = false;
      auto try_moves = [&](int target, Mask moves) {
        for_each_bit(moves, [&](int z) {
          if (found || exhausted_) return;
          if (forbidden_[static_cast<std::size_t>(target)] & bit(z)) return;
          add(target, z);
          if (dfs()) {
            found = true;
            return;
          }
          remove(target, z);
          forbidden_[static_cast<std::size_t>(target)] |= bit(z);
        });
      };
      try_moves(bx, best_mx);
      try_moves(by, best_my);
      if (found) return true;
      forbidden_[static_cast<std::size_t>(bx)] = saved_x;
      forbidden_[static_cast<std::size_t>(by)] = saved_y;
      return false;
    }

    if (placed_count_ == h_.k) return true;

    const int x = order_[static_cast<std::size_t>(placed_count_)];
    std::vector<int> candidates;
    const int must = must_[static_cast<std::size_t>(x)];
    if (must >= 0) {
      if ((free & bit(must)) && !(forbidden_[static_cast<std::size_t>(x)] & bit(must))) candidates.push_back(must);
    } else {
      for_each_bit(free & ~forbidden_[static_cast<std::size_t>(x)], [&](int v) { candidates.push_back(v); });
      std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        return host_degree_[static_cast<std::size_t>(a)] > host_degree_[static_cast<std::size_t>(b)];
      });
    }

    const Mask saved = forbidden_[static_cast<std::size_t>(x)];
    placed_[static_cast<std::size_t>(x)] = true;
    ++placed_count_;
    for (int a : candidates) {
      add(x, a);
      if (must < 0) forbidden_[static_cast<std::size_t>(x)] = saved | (bit(a) - 1);
      if (unplaced_feasible() && dfs()) return true;
      remove(x, a);
      forbidden_[static_cast<std::size_t>(x)] = saved;
      if (exhausted_) break;
    }
    placed_[static_cast<std::size_t>(x)] = false;
    --placed_count_;
    return false;
  }

  const PatternGraph& h_;
  const HostGraph& g_;
  std::vector<int> must_;
  std::vector<Mask> forbidden_;
  std::vector<Mask> sets_;
  std::vector<bool> placed_;
  std::vector<int> host_degree_;
  std::vector<int> order_;
  Mask used_ = 0;
  int placed_count_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  bool exhausted_ = false;
};

}  // namespace

RawResult search(const PatternGraph& h, const HostGraph& g, const IndexConstraints& c, std::uint64_t node_budget) {
  return Searcher(h, g, c, node_budget).run();
}

MinorEmbedding to_embedding(const Graph& h, const Graph& g, const HostGraph& host, const std::vector<Mask>& sets) {
  MinorEmbedding m;
  for (int x = 0; x < static_cast<int>(h.order()); ++x) {
    const Mask s = sets[static_cast<std::size_t>(x)];
    auto& labels = m.branch_sets[h.label(x)];
    for_each_bit(s, [&](int v) { labels.push_back(g.label(v)); });

    // BFS spanning tree from the smallest vertex
    const int root = std::countr_zero(s);
    Mask seen = bit(root);
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for_each_bit(host.adj[static_cast<std::size_t>(v)] & s & ~seen, [&](int w) {
        seen |= bit(w);
        queue.push_back(w);
        m.tree_edges.push_back(make_edge(g.label(v), g.label(w)));
      });
    }
  }
  for (const auto& e : h.edges()) {
    const Mask sx = sets[static_cast<std::size_t>(e.u)];
    const Mask sy = sets[static_cast<std::size_t>(e.v)];
    bool done = false;
    for_each_bit(sx, [&](int a) {
      if (done) return;
      const Mask hit = host.adj[static_cast<std::size_t>(a)] & sy;
      if (hit) {
        m.edge_map[LabelEdge{h.label(e.u), h.label(e.v)}] = make_edge(g.label(a), g.label(std::countr_zero(hit)));
        done = true;
      }
    });
  }
  std::sort(m.tree_edges.begin(), m.tree_edges.end());
  return m;
}

}  // namespace detail

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult find_expansion(const Graph& h, const Graph& g, const EmbeddingConstraints& c,
                            std::uint64_t node_budget) {
  const auto host = detail::make_host(g);
  const auto pattern = detail::make_pattern(h);
  const auto ic = detail::resolve_constraints(h, g, c);
  auto raw = detail::search(pattern, host, ic, node_budget);
  SearchResult out;
  out.status = raw.status;
  out.nodes = raw.nodes;
  if (raw.status == SearchStatus::found) out.embedding = detail::to_embedding(h, g, host, raw.sets);
  return out;
}

bool is_minor(const Graph& h, const Graph& g, bool override_guard) {
  if (g.order() > kIsMinorGuard && !override_guard) {
    throw GraphError("is_minor: host has " + std::to_string(g.order()) + " vertices, above the guard of " +
                     std::to_string(kIsMinorGuard));
  }
  auto r = find_expansion(h, g, {}, UINT64_MAX);
  return r.status == SearchStatus::found;
}

ComponentPartition partition_components(const Graph& h, const Graph& a) {
  const auto comps = connected_components(h);
  auto same = [](const Graph& x, const Graph& y) { return x.labels() == y.labels() && x.edges() == y.edges(); };
  auto it = std::find_if(comps.begin(), comps.end(), [&](const Graph& c) { return same(c, a); });
  if (it == comps.end()) throw GraphError("a is not a component of h");

  ComponentPartition out;
  for (const auto& c : comps) {
    if (same(c, a)) continue;
    auto r = find_expansion(a, c);
    if (r.status == SearchStatus::budget_exhausted) throw GraphError("partition_components: search budget exhausted");
    (r.status == SearchStatus::found ? out.containing : out.not_containing).push_back(c);
  }
  return out;
}

}  // namespace epw
