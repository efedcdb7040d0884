#include "epw/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace epw {

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

LabelEdge make_edge(VertexLabel a, VertexLabel b) {
  if (b < a) std::swap(a, b);
  return LabelEdge{std::move(a), std::move(b)};
}

EdgeSet normalize(EdgeSet edges) {
  for (auto& e : edges) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Graph Graph::from_lists(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges,
                        std::vector<std::string> roles) {
  if (!roles.empty() && roles.size() != vertices.size()) {
    throw GraphError("provenance must cover every vertex exactly once");
  }
  std::vector<std::size_t> perm(vertices.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });

  Graph g;
  g.labels_.reserve(vertices.size());
  for (std::size_t i : perm) {
    if (vertices[i].empty()) throw GraphError("empty vertex label");
    if (!g.labels_.empty() && g.labels_.back() == vertices[i]) {
      throw GraphError("duplicate vertex '" + vertices[i] + "'");
    }
    g.labels_.push_back(std::move(vertices[i]));
    if (!roles.empty()) g.roles_.push_back(std::move(roles[i]));
  }

  g.adjacency_.assign(g.labels_.size(), {});
  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    auto a = g.find(e.u);
    auto b = g.find(e.v);
    if (!a || !b) throw GraphError("edge " + e.u + " " + e.v + " has an unknown endpoint");
    if (*a == *b) throw GraphError("self-loop at '" + e.u + "'");
    g.edges_.push_back(Edge{std::min(*a, *b), std::max(*a, *b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw GraphError("duplicate edge " + g.label(dup->u) + " " + g.label(dup->v));
  }
  for (const auto& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::optional<int> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Graph::index(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::edge_id(int u, int v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

LabelEdge Graph::label_edge(int e) const {
  const auto& edge = edges_.at(static_cast<std::size_t>(e));
  return LabelEdge{label(edge.u), label(edge.v)};
}

std::vector<LabelEdge> Graph::label_edges() const {
  std::vector<LabelEdge> out;
  out.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out.push_back(label_edge(static_cast<int>(e)));
  return out;
}

const std::string& Graph::role(int v) const {
  static const std::string none;
  if (roles_.empty()) return none;
  return roles_.at(static_cast<std::size_t>(v));
}

Graph Graph::with_roles(std::vector<std::string> roles) const {
  if (!roles.empty() && roles.size() != labels_.size()) {
    throw GraphError("provenance must cover every vertex exactly once");
  }
  Graph g = *this;
  g.roles_ = std::move(roles);
  return g;
}

Graph Graph::with_uniform_role(const std::string& role) const {
  return with_roles(std::vector<std::string>(labels_.size(), role));
}

Graph Graph::without_edges(const std::vector<bool>& removed) const {
  Graph g;
  g.labels_ = labels_;
  g.roles_ = roles_;
  g.adjacency_.assign(labels_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (e < removed.size() && removed[e]) continue;
    g.edges_.push_back(edges_[e]);
    g.adjacency_[static_cast<std::size_t>(edges_[e].u)].push_back(edges_[e].v);
    g.adjacency_[static_cast<std::size_t>(edges_[e].v)].push_back(edges_[e].u);
  }
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<bool> keep(labels_.size(), false);
  for (int v : vertices) keep.at(static_cast<std::size_t>(v)) = true;
  std::vector<VertexLabel> labels;
  std::vector<std::string> roles;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!keep[v]) continue;
    labels.push_back(labels_[v]);
    if (!roles_.empty()) roles.push_back(roles_[v]);
  }
  std::vector<LabelEdge> edges;
  for (const auto& e : edges_) {
    if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)]) {
      edges.push_back(LabelEdge{label(e.u), label(e.v)});
    }
  }
  return from_lists(std::move(labels), edges, std::move(roles));
}

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && edges_ == other.edges_ && roles_ == other.roles_;
}

std::size_t degree(const Graph& g, std::string_view v) { return g.degree(g.index(v)); }

Graph delete_edges(const Graph& g, const EdgeSet& x) {
  std::vector<bool> removed(g.size(), false);
  for (const auto& e : x) {
    auto a = g.find(e.u);
    auto b = g.find(e.v);
    std::optional<int> id;
    if (a && b) id = g.edge_id(*a, *b);
    if (!id) throw GraphError("cannot delete non-edge " + e.u + " " + e.v);
    removed[static_cast<std::size_t>(*id)] = true;
  }
  return g.without_edges(removed);
}

VertexLabel part_label(std::string_view label, std::size_t part) {
  return std::string(label) + "#" + std::to_string(part);
}

UnionResult disjoint_union_with_identifications(std::span<const Graph> parts,
                                                std::span<const Identification> identify) {
  UnionResult result;
  const bool keep_roles =
      !parts.empty() && std::all_of(parts.begin(), parts.end(), [](const Graph& p) { return p.has_provenance(); });

  std::map<VertexLabel, std::string> role_of;
  std::vector<VertexLabel> order;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v = 0; v < static_cast<int>(parts[i].order()); ++v) {
      auto label = part_label(parts[i].label(v), i);
      order.push_back(label);
      role_of[label] = parts[i].role(v);
    }
  }

  // merged member -> group name, and group name -> role of its first member
  std::map<VertexLabel, VertexLabel> merged_into;
  std::map<VertexLabel, std::string> group_role;
  for (const auto& group : identify) {
    if (group.members.empty()) continue;
    const VertexLabel name = group.name.empty() ? group.members.front() : group.name;
    for (const auto& m : group.members) {
      if (!role_of.contains(m)) throw GraphError("identification references missing vertex '" + m + "'");
      if (merged_into.contains(m)) throw GraphError("vertex '" + m + "' appears in two identification groups");
      merged_into[m] = name;
    }
    if (group_role.contains(name)) throw GraphError("identification name '" + name + "' used twice");
    group_role[name] = role_of[group.members.front()];
  }
  for (const auto& [name, role] : group_role) {
    auto it = merged_into.find(name);
    if (role_of.contains(name) && (it == merged_into.end() || it->second != name)) {
      throw GraphError("identification name '" + name + "' collides with an existing vertex");
    }
  }

  auto resolve = [&](const VertexLabel& l) -> VertexLabel {
    auto it = merged_into.find(l);
    return it == merged_into.end() ? l : it->second;
  };

  std::vector<VertexLabel> labels;
  std::vector<std::string> roles;
  std::set<VertexLabel> seen;
  for (const auto& l : order) {
    const auto r = resolve(l);
    if (!seen.insert(r).second) continue;
    labels.push_back(r);
    if (keep_roles) roles.push_back(group_role.contains(r) ? group_role[r] : role_of[l]);
  }

  std::set<LabelEdge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i].edges()) {
      const auto a = resolve(part_label(parts[i].label(e.u), i));
      const auto b = resolve(part_label(parts[i].label(e.v), i));
      if (a == b) {
        result.warnings.push_back("identification turned edge into a loop at '" + a + "'; dropped");
        continue;
      }
      if (!edges.insert(make_edge(a, b)).second) {
        result.warnings.push_back("parallel edge " + std::min(a, b) + " " + std::max(a, b) + " collapsed");
      }
    }
  }
  result.graph = Graph::from_lists(std::move(labels), {edges.begin(), edges.end()}, std::move(roles));
  return result;
}

namespace {

std::string numbered(std::string_view prefix, int i) { return std::string(prefix) + std::to_string(i); }

}  // namespace

Graph complete_graph(int n, std::string_view prefix) {
  std::vector<VertexLabel> vs;
  std::vector<LabelEdge> es;
  for (int i = 1; i <= n; ++i) vs.push_back(numbered(prefix, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back(make_edge(numbered(prefix, i), numbered(prefix, j)));
  return Graph::from_lists(std::move(vs), es);
}

Graph path_graph(int n, std::string_view prefix) {
  std::vector<VertexLabel> vs;
  std::vector<LabelEdge> es;
  for (int i = 1; i <= n; ++i) vs.push_back(numbered(prefix, i));
  for (int i = 1; i < n; ++i) es.push_back(make_edge(numbered(prefix, i), numbered(prefix, i + 1)));
  return Graph::from_lists(std::move(vs), es);
}

Graph cycle_graph(int n, std::string_view prefix) {
  if (n < 3) throw GraphError("a simple cycle needs at least 3 vertices");
  std::vector<VertexLabel> vs;
  std::vector<LabelEdge> es;
  for (int i = 1; i <= n; ++i) vs.push_back(numbered(prefix, i));
  for (int i = 1; i <= n; ++i) es.push_back(make_edge(numbered(prefix, i), numbered(prefix, i % n + 1)));
  return Graph::from_lists(std::move(vs), es);
}

Graph star_graph(int leaves, std::string_view prefix) {
  std::vector<VertexLabel> vs{numbered(prefix, 0)};
  std::vector<LabelEdge> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back(numbered(prefix, i));
    es.push_back(make_edge(numbered(prefix, 0), numbered(prefix, i)));
  }
  return Graph::from_lists(std::move(vs), es);
}

}  // namespace epw
