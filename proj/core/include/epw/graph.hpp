#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epw {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text readers; carries the 1-based line number of the offending input.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using VertexLabel = std::string;

/// Undirected edge between two labels, stored with u < v.
struct LabelEdge {
  VertexLabel u;
  VertexLabel v;

  auto operator<=>(const LabelEdge&) const = default;
};

LabelEdge make_edge(VertexLabel a, VertexLabel b);

/// A set of edges of some host graph, kept sorted and duplicate free.
using EdgeSet = std::vector<LabelEdge>;

EdgeSet normalize(EdgeSet edges);

/// Index-level edge, u < v.
struct Edge {
  int u;
  int v;

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph with string labels.
///
/// Vertices are stored in label order, so vertex index order and label order
/// agree; every tie-break in the library relies on that. The optional
/// provenance assigns a role string to each vertex (which construction step
/// produced it). Graph values are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on duplicate vertices, empty labels, self-loops,
  /// parallel edges or edges with unknown endpoints. `roles` is either empty
  /// or parallel to `vertices`.
  static Graph from_lists(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges,
                          std::vector<std::string> roles = {});

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> find(std::string_view label) const;
  /// Like find(), but throws GraphError for unknown labels.
  int index(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<int> edge_id(int u, int v) const;
  LabelEdge label_edge(int e) const;
  std::vector<LabelEdge> label_edges() const;

  bool has_provenance() const noexcept { return !roles_.empty(); }
  /// Empty string when the graph carries no provenance.
  const std::string& role(int v) const;
  const std::vector<std::string>& roles() const noexcept { return roles_; }
  Graph with_roles(std::vector<std::string> roles) const;
  Graph with_uniform_role(const std::string& role) const;

  /// Same vertex set, dropping edges whose id is flagged in `removed`.
  Graph without_edges(const std::vector<bool>& removed) const;
  /// Subgraph induced by the given vertex indices.
  Graph induced(std::span<const int> vertices) const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::string> roles_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

std::size_t degree(const Graph& g, std::string_view v);

/// G - X. Throws GraphError if X contains a non-edge of g.
Graph delete_edges(const Graph& g, const EdgeSet& x);

/// One identification group over the relabeled union. Members use the
/// `label#i` form (i = index of the part). The merged vertex is called
/// `name`, or the first member when `name` is empty.
struct Identification {
  std::vector<VertexLabel> members;
  VertexLabel name;
};

struct UnionResult {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Label of vertex `label` of part `part` after relabeling apart.
VertexLabel part_label(std::string_view label, std::size_t part);

/// Relabels every part apart (`label#i`), then merges each identification
/// group into a single vertex. Parallel edges and loops created by the merge
/// are dropped and reported in `warnings`. Roles are kept when every part has
/// provenance; a merged vertex takes the role of its first member.
UnionResult disjoint_union_with_identifications(std::span<const Graph> parts,
                                                std::span<const Identification> identify = {});

// Named small graphs used throughout tests, benchmarks and the CLI.
Graph complete_graph(int n, std::string_view prefix = "");
Graph path_graph(int n, std::string_view prefix = "");
Graph cycle_graph(int n, std::string_view prefix = "");
Graph star_graph(int leaves, std::string_view prefix = "");

}  // namespace epw
