#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "epw/decomposition.hpp"
#include "epw/graph.hpp"

namespace epw {

/// A candidate counterexample graph with its root mapping and claimed bounds.
/// `roots` maps each cutvertex s of the leaf block to the vertex s' of
/// `astar` that the branch set of s must contain.
struct AstarSpec {
  Graph astar;
  std::map<VertexLabel, VertexLabel> roots;
  int k = 1;  // no k edge-disjoint expansions
  int r = 1;  // robust against r - 1 edge deletions
};

// Document layout: an edge-list graph block, then any number of
// `root s -> s'` lines, then `k <int>` and `r <int>`.
AstarSpec load_astar_spec(std::string_view text);
std::string serialize_astar_spec(const AstarSpec& spec);

/// Replaces every segment of g (taken in the context graph ctx) by r parallel
/// copies between copies of its branch vertices:
///  - between segments of length l become r internally disjoint paths of length max{l, 2},
///  - pendant segments of length l become r paths of length l sharing only the branch copy,
///  - closed segments (a cycle hanging at one branch vertex) become r cycles of
///    length max{l, 3} sharing only the branch copy.
/// Branch copies keep the label of the vertex they copy; every other vertex
/// gets a derived label containing '#'. Roles record the source segment and
/// copy index.
Graph g_times(const Graph& g, const Graph& ctx, int r);

/// Vertices whose role marks them as part of the A* region.
std::vector<VertexLabel> astar_region(const Graph& hstar);

enum class GadgetMode { theorem1, theorem2 };

struct GadgetRecipe {
  GadgetMode mode = GadgetMode::theorem2;
  Graph h;
  VertexLabel selector;  // theorem1: any vertex of the component used as A
  AstarSpec spec;
  int r = 3;
  std::optional<PropertyPredicate> predicate;  // theorem2 only
};

/// Audit trail of a gadget build: every classification and identification.
struct BuildTrace {
  GadgetMode mode = GadgetMode::theorem2;
  int r = 0;
  std::vector<VertexLabel> a_vertices;
  std::vector<std::vector<VertexLabel>> property_blocks;  // blocks with the property (theorem2)
  std::vector<std::vector<VertexLabel>> tp_blocks;        // minimal subtree over property blocks
  std::vector<std::vector<VertexLabel>> b;                // B: A is not a minor
  std::vector<std::vector<VertexLabel>> c;                // C: A is a minor, C != A
  std::vector<std::vector<VertexLabel>> d;                // D: components outside T_C (theorem2)
  std::vector<std::vector<VertexLabel>> p;                // components of trivial blocks of B (theorem2)
  std::vector<std::string> parts;                         // description of every assembled part, in union order
  std::vector<Identification> identifications;
  std::vector<std::string> warnings;
};

nlohmann::ordered_json to_json(const BuildTrace& trace);

struct GadgetBuild {
  Graph hstar;
  BuildTrace trace;
};

/// Component-wise assembly: spec.astar, r copies of every component B with
/// A not a minor of B, and one g_times(C, h, r) for every other component C
/// with A a minor of C. Throws GraphError if `a` is not a component of h or
/// has no vertex of degree >= 3.
GadgetBuild h_star_components(const Graph& h, const Graph& a, const AstarSpec& spec, int r);

/// Block-wise assembly over the block-cut tree of a connected h, with copies
/// of shared vertices identified and the roots of spec.astar identified with
/// all copies of their cutvertex.
GadgetBuild h_star_blocks(const GadgetRecipe& recipe);

/// Dispatches on recipe.mode.
GadgetBuild build_gadget(const GadgetRecipe& recipe);

}  // namespace epw
