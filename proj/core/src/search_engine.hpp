#pragma once

// Index-level expansion search shared by minor.cpp and the packing/hitting
// verifiers. Not installed.

#include <bit>
#include <cstdint>
#include <vector>

#include "epw/graph.hpp"
#include "epw/minor.hpp"

namespace epw::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

/// Host graph as adjacency masks. Vertex indices match the source Graph.
struct HostGraph {
  int n = 0;
  std::vector<Mask> adj;

  Mask all() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }
  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for_each_bit(s, [&](int v) { out |= adj[static_cast<std::size_t>(v)]; });
    return out;
  }
};

HostGraph make_host(const Graph& g);
/// Keeps only the edges whose id bit is set in `edge_keep` (requires |E(g)| <= 64).
HostGraph make_host(const Graph& g, Mask edge_keep);
/// Drops the edges flagged in `removed`.
HostGraph make_host(const Graph& g, const std::vector<bool>& removed);

struct PatternGraph {
  int k = 0;
  std::vector<Mask> adj;
  std::vector<std::pair<int, int>> edges;
};

PatternGraph make_pattern(const Graph& h);

struct IndexConstraints {
  std::vector<int> must;        // host vertex or -1, per pattern vertex
  std::vector<Mask> forbidden;  // per pattern vertex
};

IndexConstraints resolve_constraints(const Graph& h, const Graph& g, const EmbeddingConstraints& c);

struct RawResult {
  SearchStatus status = SearchStatus::none;
  std::vector<Mask> sets;
  std::uint64_t nodes = 0;
};

RawResult search(const PatternGraph& h, const HostGraph& g, const IndexConstraints& c, std::uint64_t node_budget);

/// Converts raw branch sets to a labeled embedding, picking edge images and
/// spanning-tree edges from `host` (so a masked host yields a footprint
/// inside its edge mask).
MinorEmbedding to_embedding(const Graph& h, const Graph& g, const HostGraph& host, const std::vector<Mask>& sets);

}  // namespace epw::detail
