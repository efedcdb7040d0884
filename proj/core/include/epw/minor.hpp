#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "epw/graph.hpp"

namespace epw {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Largest host the search engine accepts (vertex sets are 64-bit masks).
inline constexpr std::size_t kMaxSearchVertices = 64;
/// is_minor() refuses larger hosts unless the guard is overridden.
inline constexpr std::size_t kIsMinorGuard = 24;
/// Hard limit of the partition-enumeration oracle.
inline constexpr std::size_t kNaiveOracleLimit = 8;

/// Branch sets plus edge images witnessing an H-expansion in G.
///
/// `tree_edges` optionally lists edges of G inside branch sets that span
/// them; together with the edge images they form the footprint of the
/// expansion, which is what edge-disjointness is measured on.
struct MinorEmbedding {
  std::map<VertexLabel, std::vector<VertexLabel>> branch_sets;
  std::map<LabelEdge, LabelEdge> edge_map;
  std::vector<LabelEdge> tree_edges;

  EdgeSet footprint() const;
  bool operator==(const MinorEmbedding&) const = default;
};

/// Constraints on branch sets, keyed by vertices of H.
struct EmbeddingConstraints {
  std::map<VertexLabel, VertexLabel> must_contain;
  std::map<VertexLabel, std::vector<VertexLabel>> allowed_region;
  std::map<VertexLabel, std::vector<VertexLabel>> forbidden_region;

  bool empty() const { return must_contain.empty() && allowed_region.empty() && forbidden_region.empty(); }
};

/// True iff every MinorEmbedding invariant holds for (h, g, m). When tree
/// edges are present they must be edges of g inside a single branch set and
/// must connect each branch set on their own.
bool verify_embedding(const Graph& h, const Graph& g, const MinorEmbedding& m);

/// True iff m satisfies the constraints (and names only known vertices).
bool satisfies(const Graph& g, const MinorEmbedding& m, const EmbeddingConstraints& c);

enum class SearchStatus { found, none, budget_exhausted };

std::string to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<MinorEmbedding> embedding;
  std::uint64_t nodes = 0;
};

/// Backtracking expansion search. `none` is only returned after the search
/// space is exhausted; running out of `node_budget` search nodes yields
/// `budget_exhausted`. Throws GraphError for constraints that name unknown
/// vertices or hosts beyond kMaxSearchVertices.
SearchResult find_expansion(const Graph& h, const Graph& g, const EmbeddingConstraints& c = {},
                            std::uint64_t node_budget = kDefaultNodeBudget);

/// Exact minor test. Hosts above kIsMinorGuard vertices are refused unless
/// `override_guard` is set.
bool is_minor(const Graph& h, const Graph& g, bool override_guard = false);

/// Independent oracle: enumerates every assignment of the vertices of g to
/// branch sets (or to nothing) and checks the definition directly.
/// Throws GraphError when |V(g)| > kNaiveOracleLimit.
bool naive_is_minor_oracle(const Graph& h, const Graph& g);

/// Components of h other than `a`, split by whether `a` is a minor of them.
struct ComponentPartition {
  std::vector<Graph> not_containing;  // a is not a minor of B
  std::vector<Graph> containing;      // a is a minor of C, C != a
};

/// Throws GraphError when `a` is not one of the components of h.
ComponentPartition partition_components(const Graph& h, const Graph& a);

}  // namespace epw
