#include <algorithm>
#include <map>
#include <set>

#include "epw/minor.hpp"

namespace epw {

EdgeSet MinorEmbedding::footprint() const {
  EdgeSet out = tree_edges;
  for (const auto& [_, image] : edge_map) out.push_back(image);
  return normalize(std::move(out));
}

bool verify_embedding(const Graph& h, const Graph& g, const MinorEmbedding& m) {
  if (m.branch_sets.size() != h.order()) return false;
  std::vector<int> owner(g.order(), -1);
  for (int x = 0; x < static_cast<int>(h.order()); ++x) {
    auto it = m.branch_sets.find(h.label(x));
    if (it == m.branch_sets.end() || it->second.empty()) return false;
    for (const auto& v : it->second) {
      auto gv = g.find(v);
      if (!gv || owner[static_cast<std::size_t>(*gv)] != -1) return false;
      owner[static_cast<std::size_t>(*gv)] = x;
    }
  }

  // every branch set induces a connected subgraph
  for (int x = 0; x < static_cast<int>(h.order()); ++x) {
    const auto& members = m.branch_sets.at(h.label(x));
    const int start = g.index(members.front());
    std::set<int> seen{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (owner[static_cast<std::size_t>(w)] == x && seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != members.size()) return false;
  }

  if (m.edge_map.size() != h.size()) return false;
  std::set<LabelEdge> images;
  for (const auto& e : h.edges()) {
    auto it = m.edge_map.find(LabelEdge{h.label(e.u), h.label(e.v)});
    if (it == m.edge_map.end()) return false;
    auto a = g.find(it->second.u);
    auto b = g.find(it->second.v);
    if (!a || !b || !g.adjacent(*a, *b)) return false;
    const int oa = owner[static_cast<std::size_t>(*a)];
    const int ob = owner[static_cast<std::size_t>(*b)];
    if (!((oa == e.u && ob == e.v) || (oa == e.v && ob == e.u))) return false;
    if (!images.insert(make_edge(it->second.u, it->second.v)).second) return false;
  }

  if (!m.tree_edges.empty()) {
    // tree edges alone must connect each branch set
    std::vector<int> parent(g.order());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    for (const auto& e : m.tree_edges) {
      auto a = g.find(e.u);
      auto b = g.find(e.v);
      if (!a || !b || !g.adjacent(*a, *b)) return false;
      if (owner[static_cast<std::size_t>(*a)] == -1 || owner[static_cast<std::size_t>(*a)] != owner[static_cast<std::size_t>(*b)]) return false;
      parent[static_cast<std::size_t>(find(*a))] = find(*b);
    }
    for (const auto& [x, members] : m.branch_sets) {
      const int root = find(g.index(members.front()));
      for (const auto& v : members) {
        if (find(g.index(v)) != root) return false;
      }
    }
  }
  return true;
}

bool satisfies(const Graph& g, const MinorEmbedding& m, const EmbeddingConstraints& c) {
  auto set_of = [&](const VertexLabel& x) -> const std::vector<VertexLabel>* {
    auto it = m.branch_sets.find(x);
    return it == m.branch_sets.end() ? nullptr : &it->second;
  };
  auto has = [](const std::vector<VertexLabel>& s, const VertexLabel& v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  for (const auto& [x, v] : c.must_contain) {
    const auto* s = set_of(x);
    if (!s || !g.contains(v) || !has(*s, v)) return false;
  }
  for (const auto& [x, region] : c.allowed_region) {
    const auto* s = set_of(x);
    if (!s) return false;
    for (const auto& v : *s) {
      if (!has(region, v)) return false;
    }
  }
  for (const auto& [x, region] : c.forbidden_region) {
    const auto* s = set_of(x);
    if (!s) return false;
    for (const auto& v : *s) {
      if (has(region, v)) return false;
    }
  }
  return true;
}

}  // namespace epw
