#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "epw/graph.hpp"

namespace epw {

/// Components ordered by their smallest vertex label.
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Block {
  std::size_t id = 0;  // position in the block-cut tree it was computed for
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  bool trivial = false;  // a single edge, i.e. K_2

  Graph graph() const;
  bool contains(const VertexLabel& v) const;
};

/// Blocks and cutvertices of a connected graph, with the bipartite
/// block-cutvertex incidence tree. Blocks are sorted by vertex label list and
/// `id` equals the position in `blocks` for a freshly computed tree.
struct BlockCutTree {
  std::vector<Block> blocks;
  std::vector<VertexLabel> cutvertices;
  std::vector<std::pair<std::size_t, VertexLabel>> tree_edges;  // (block id, cutvertex)

  const Block& block(std::size_t id) const;
  std::size_t degree_of_block(std::size_t id) const;
};

/// Throws GraphError on disconnected input.
BlockCutTree block_cut_tree(const Graph& g);

/// Vertices of g whose degree in ctx is at least 3. Throws if g is not a subgraph of ctx.
std::vector<VertexLabel> branch_vertices(const Graph& g, const Graph& ctx);

enum class SegmentKind { between, pendant, closed };

std::string to_string(SegmentKind kind);

/// A maximal chain of the decomposition. For `between` the endpoints are two
/// branch vertices, for `pendant` a branch vertex and the degree-1 tip, for
/// `closed` the same branch vertex twice.
struct Segment {
  SegmentKind kind = SegmentKind::between;
  VertexLabel from;
  VertexLabel to;
  std::vector<VertexLabel> internal;

  std::size_t length() const { return internal.size() + 1; }
  auto operator<=>(const Segment&) const = default;
};

/// Throws GraphError if g is disconnected, not a subgraph of ctx, or has no branch vertex.
std::vector<Segment> segment_decomposition(const Graph& g, const Graph& ctx);

enum class Shape { cycle, path, isolated_vertex, has_degree3_vertex };

std::string to_string(Shape shape);

/// Connected graphs of maximum degree 2 are cycles, paths or a single vertex.
Shape classify_max_degree2(const Graph& h);

/// "Contains `minor` as a minor". The complement is minor closed, so the
/// property is hereditary in the sense the gadget construction needs.
struct PropertyPredicate {
  std::string name;
  Graph minor;

  bool holds(const Graph& g) const;
};

/// The unique smallest subtree of `t` that contains every block in `marked`
/// (block ids of `t`). Throws GraphError for an empty or unknown marking.
BlockCutTree minimal_subtree(const BlockCutTree& t, const std::vector<std::size_t>& marked);

/// A leaf block of `t`; ties go to the smallest vertex label list.
Block choose_leaf_block(const BlockCutTree& t);

}  // namespace epw
