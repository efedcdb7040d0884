#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "epw/minor.hpp"

namespace epw::testing {
namespace {

std::vector<VertexLabel> numbered_labels(int n) {
  std::vector<VertexLabel> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

int count_components(const Graph& g, int skip) {
  std::vector<int> seen(g.order(), 0);
  int comps = 0;
  for (int s = 0; s < static_cast<int>(g.order()); ++s) {
    if (s == skip || seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (w != skip && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, int> pair_index;
  for (std::size_t p = 0; p < pairs.size(); ++p) pair_index[pairs[p]] = static_cast<int>(p);

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool canonical = true;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!(mask >> e & 1U)) continue;
        int a = p[static_cast<std::size_t>(pairs[e].first)], b = p[static_cast<std::size_t>(pairs[e].second)];
        image |= std::uint32_t{1} << pair_index[{std::min(a, b), std::max(a, b)}];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<LabelEdge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1U) edges.push_back(make_edge(std::to_string(pairs[e].first), std::to_string(pairs[e].second)));
    }
    out.push_back(Graph::from_lists(numbered_labels(n), edges));
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<LabelEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back(make_edge(std::to_string(i), std::to_string(j)));
  return Graph::from_lists(numbered_labels(n), edges);
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::set<LabelEdge> edges;
  for (int i = 1; i < n; ++i) {
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    edges.insert(make_edge(std::to_string(parent), std::to_string(i)));
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.insert(make_edge(std::to_string(i), std::to_string(j)));
  return Graph::from_lists(numbered_labels(n), {edges.begin(), edges.end()});
}

std::set<VertexLabel> brute_force_cutvertices(const Graph& g) {
  std::set<VertexLabel> out;
  const int base = count_components(g, -1);
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    if (count_components(g, v) > base) out.insert(g.label(v));
  }
  return out;
}

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(g.order());
  std::vector<int> path;
  std::vector<bool> on_path(g.order(), false);
  // Cycles are rooted at their smallest vertex and recorded once per direction pair.
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < path.size(); ++i) {
          ids.push_back(*g.edge_id(path[i], path[(i + 1) % path.size()]));
        }
        std::sort(ids.begin(), ids.end());
        out.push_back(ids);
      }
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(g.order(), false);
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, s);
  }
  return out;
}

std::set<std::vector<VertexLabel>> brute_force_blocks(const Graph& g) {
  UnionFind edges(g.size());
  for (const auto& cycle : simple_cycles(g)) {
    for (std::size_t i = 1; i < cycle.size(); ++i) edges.unite(cycle[0], cycle[i]);
  }
  std::map<int, std::set<VertexLabel>> classes;
  for (int e = 0; e < static_cast<int>(g.size()); ++e) {
    auto& c = classes[edges.find(e)];
    c.insert(g.label(g.edges()[static_cast<std::size_t>(e)].u));
    c.insert(g.label(g.edges()[static_cast<std::size_t>(e)].v));
  }
  std::set<std::vector<VertexLabel>> out;
  for (const auto& [_, c] : classes) out.insert({c.begin(), c.end()});
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    if (g.degree(v) == 0) out.insert({g.label(v)});
  }
  return out;
}

std::size_t max_disjoint_cycles(const Graph& g) {
  const auto cycles = simple_cycles(g);
  std::size_t best = 0;
  std::vector<bool> used(g.size(), false);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t count) {
    best = std::max(best, count);
    for (std::size_t i = from; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      if (std::any_of(c.begin(), c.end(), [&](int e) { return used[static_cast<std::size_t>(e)]; })) continue;
      for (int e : c) used[static_cast<std::size_t>(e)] = true;
      go(i + 1, count + 1);
      for (int e : c) used[static_cast<std::size_t>(e)] = false;
    }
  };
  go(0, 0);
  return best;
}

std::size_t cycle_rank(const Graph& g) {
  UnionFind uf(g.order());
  std::size_t forest = 0;
  for (const auto& e : g.edges()) forest += uf.unite(e.u, e.v) ? 1 : 0;
  return g.size() - forest;
}

std::size_t brute_force_packing(const Graph& h, const Graph& g, std::size_t cap) {
  const std::size_t m = g.size();
  std::size_t best = 0;
  for (std::size_t t = 1; t <= cap; ++t) {
    // odometer over group assignments in {-1, 0..t-1}
    std::vector<int> group(m, -1);
    bool found = false;
    while (!found) {
      bool ok = true;
      for (std::size_t k = 0; k < t && ok; ++k) {
        std::vector<bool> removed(m);
        for (std::size_t e = 0; e < m; ++e) removed[e] = group[e] != static_cast<int>(k);
        ok = naive_is_minor_oracle(h, g.without_edges(removed));
      }
      if (ok) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < m && group[i] == static_cast<int>(t) - 1) group[i++] = -1;
      if (i == m) break;
      ++group[i];
    }
    if (!found) break;
    best = t;
  }
  return best;
}

std::size_t count_degree_at_least(const Graph& g, std::size_t d) {
  std::size_t out = 0;
  for (int v = 0; v < static_cast<int>(g.order()); ++v) out += g.degree(v) >= d ? 1 : 0;
  return out;
}

Graph thin_bundle(const Graph& gadget, std::size_t segment) {
  const std::string tag = ".s" + std::to_string(segment) + ",copy";
  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(gadget.order()); ++v) {
    const auto& role = gadget.role(v);
    const auto at = role.find(tag);
    if (at != std::string::npos && role.substr(at + tag.size()) != "1)") continue;
    keep.push_back(v);
  }
  return gadget.induced(keep);
}

}  // namespace epw::testing
