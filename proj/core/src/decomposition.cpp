#include "epw/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "epw/minor.hpp"

namespace epw {
namespace {

std::vector<int> component_ids(const Graph& g, int* count) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (int s = 0; s < static_cast<int>(g.order()); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace

std::vector<Graph> connected_components(const Graph& g) {
  int count = 0;
  auto comp = component_ids(g, &count);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int v = 0; v < static_cast<int>(g.order()); ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<Graph> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(g.induced(m));
  return out;
}

bool is_connected(const Graph& g) {
  int count = 0;
  component_ids(g, &count);
  return count <= 1;
}

Graph Block::graph() const { return Graph::from_lists(vertices, edges); }

bool Block::contains(const VertexLabel& v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

const Block& BlockCutTree::block(std::size_t id) const {
  for (const auto& b : blocks) {
    if (b.id == id) return b;
  }
  throw GraphError("unknown block id " + std::to_string(id));
}

std::size_t BlockCutTree::degree_of_block(std::size_t id) const {
  return static_cast<std::size_t>(
      std::count_if(tree_edges.begin(), tree_edges.end(), [id](const auto& e) { return e.first == id; }));
}

BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) throw GraphError("block-cut tree needs a connected graph");
  BlockCutTree t;
  const int n = static_cast<int>(g.order());
  if (n == 0) return t;
  if (n == 1) {
    t.blocks.push_back(Block{0, {g.label(0)}, {}, false});
    return t;
  }

  // Hopcroft-Tarjan with an edge stack.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> raw_blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] == -1) {
        ++children;
        edge_stack.push_back(Edge{v, w});
        dfs(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          if (parent != -1) is_cut[static_cast<std::size_t>(v)] = true;
          std::vector<Edge> block;
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e.u == v && e.v == w) break;
          }
          raw_blocks.push_back(std::move(block));
        }
      } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
        edge_stack.push_back(Edge{v, w});
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
    if (parent == -1 && children > 1) is_cut[static_cast<std::size_t>(v)] = true;
  };
  dfs(0, -1);

  for (const auto& raw : raw_blocks) {
    Block b;
    std::set<int> vs;
    for (const auto& e : raw) {
      vs.insert(e.u);
      vs.insert(e.v);
      b.edges.push_back(make_edge(g.label(e.u), g.label(e.v)));
    }
    for (int v : vs) b.vertices.push_back(g.label(v));
    std::sort(b.edges.begin(), b.edges.end());
    b.trivial = b.edges.size() == 1;
    t.blocks.push_back(std::move(b));
  }
  std::sort(t.blocks.begin(), t.blocks.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (std::size_t i = 0; i < t.blocks.size(); ++i) t.blocks[i].id = i;

  for (int v = 0; v < n; ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) t.cutvertices.push_back(g.label(v));
  }
  for (const auto& b : t.blocks) {
    for (const auto& c : t.cutvertices) {
      if (b.contains(c)) t.tree_edges.emplace_back(b.id, c);
    }
  }
  return t;
}

std::vector<VertexLabel> branch_vertices(const Graph& g, const Graph& ctx) {
  for (const auto& e : g.label_edges()) {
    auto a = ctx.find(e.u);
    auto b = ctx.find(e.v);
    if (!a || !b || !ctx.adjacent(*a, *b)) throw GraphError("g is not a subgraph of its context");
  }
  std::vector<VertexLabel> out;
  for (const auto& v : g.labels()) {
    auto c = ctx.find(v);
    if (!c) throw GraphError("g is not a subgraph of its context");
    if (ctx.degree(*c) >= 3) out.push_back(v);
  }
  return out;
}

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::between: return "between";
    case SegmentKind::pendant: return "pendant";
    case SegmentKind::closed: return "closed";
  }
  return "?";
}

std::vector<Segment> segment_decomposition(const Graph& g, const Graph& ctx) {
  if (!is_connected(g)) throw GraphError("segment decomposition needs a connected graph");
  const auto branches = branch_vertices(g, ctx);
  if (branches.empty()) throw GraphError("graph has no vertex of context degree >= 3");

  std::vector<bool> is_branch(g.order(), false);
  for (const auto& b : branches) is_branch[static_cast<std::size_t>(g.index(b))] = true;
  std::vector<bool> used(g.size(), false);
  std::vector<Segment> out;

  for (const auto& label : branches) {
    const int b = g.index(label);
    for (int first : g.neighbors(b)) {
      const int first_edge = *g.edge_id(b, first);
      if (used[static_cast<std::size_t>(first_edge)]) continue;
      used[static_cast<std::size_t>(first_edge)] = true;
      Segment s;
      s.from = label;
      int prev = b;
      int cur = first;
      while (!is_branch[static_cast<std::size_t>(cur)] && g.degree(cur) == 2) {
        s.internal.push_back(g.label(cur));
        const auto& nbrs = g.neighbors(cur);
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        used[static_cast<std::size_t>(*g.edge_id(cur, next))] = true;
        prev = cur;
        cur = next;
      }
      s.to = g.label(cur);
      if (is_branch[static_cast<std::size_t>(cur)]) {
        s.kind = cur == b ? SegmentKind::closed : SegmentKind::between;
      } else {
        s.kind = SegmentKind::pendant;  // non-branch vertices have g-degree <= 2, so this is a tip
      }
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::cycle: return "Cycle";
    case Shape::path: return "Path";
    case Shape::isolated_vertex: return "IsolatedVertex";
    case Shape::has_degree3_vertex: return "HasDegree3Vertex";
  }
  return "?";
}

Shape classify_max_degree2(const Graph& h) {
  if (h.empty() || !is_connected(h)) throw GraphError("classification needs a connected, non-empty graph");
  if (h.order() == 1) return Shape::isolated_vertex;
  bool all_two = true;
  for (int v = 0; v < static_cast<int>(h.order()); ++v) {
    if (h.degree(v) >= 3) return Shape::has_degree3_vertex;
    all_two = all_two && h.degree(v) == 2;
  }
  return all_two ? Shape::cycle : Shape::path;
}

bool PropertyPredicate::holds(const Graph& g) const {
  auto result = find_expansion(minor, g);
  if (result.status == SearchStatus::budget_exhausted) {
    throw GraphError("predicate '" + name + "' undecided within the search budget");
  }
  return result.status == SearchStatus::found;
}

BlockCutTree minimal_subtree(const BlockCutTree& t, const std::vector<std::size_t>& marked) {
  if (marked.empty()) throw GraphError("minimal subtree needs at least one marked block");
  std::set<std::size_t> marks(marked.begin(), marked.end());
  std::set<std::size_t> blocks;
  for (const auto& b : t.blocks) blocks.insert(b.id);
  for (auto id : marks) {
    if (!blocks.contains(id)) throw GraphError("marked block " + std::to_string(id) + " is not in the tree");
  }
  std::set<VertexLabel> cuts(t.cutvertices.begin(), t.cutvertices.end());
  std::set<std::pair<std::size_t, VertexLabel>> edges(t.tree_edges.begin(), t.tree_edges.end());

  auto block_degree = [&](std::size_t id) {
    return std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == id; });
  };
  auto cut_degree = [&](const VertexLabel& c) {
    return std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.second == c; });
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = blocks.begin(); it != blocks.end();) {
      if (!marks.contains(*it) && block_degree(*it) <= 1) {
        std::erase_if(edges, [id = *it](const auto& e) { return e.first == id; });
        it = blocks.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    for (auto it = cuts.begin(); it != cuts.end();) {
      if (cut_degree(*it) <= 1) {
        std::erase_if(edges, [c = *it](const auto& e) { return e.second == c; });
        it = cuts.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  BlockCutTree out;
  for (const auto& b : t.blocks) {
    if (blocks.contains(b.id)) out.blocks.push_back(b);
  }
  out.cutvertices.assign(cuts.begin(), cuts.end());
  out.tree_edges.assign(edges.begin(), edges.end());
  return out;
}

Block choose_leaf_block(const BlockCutTree& t) {
  const Block* best = nullptr;
  for (const auto& b : t.blocks) {
    if (t.degree_of_block(b.id) > 1) continue;
    if (!best || b.vertices < best->vertices) best = &b;
  }
  if (!best) throw GraphError("block tree has no leaf block");
  return *best;
}

}  // namespace epw
