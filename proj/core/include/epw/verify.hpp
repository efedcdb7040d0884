#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "epw/decomposition.hpp"
#include "epw/gadgets.hpp"
#include "epw/graph.hpp"
#include "epw/minor.hpp"

namespace epw {

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultSampleCount = 1'000;
inline constexpr std::uint64_t kDefaultSeed = 20'240'101;

/// Resource limits shared by every verifier. `nodes` bounds each single
/// expansion search; `subsets` bounds exhaustive subset enumeration, above
/// which the deletion checks fall back to `samples` seeded random subsets.
struct Budget {
  std::uint64_t nodes = kDefaultNodeBudget;
  std::uint64_t subsets = kDefaultSubsetBudget;
  std::uint64_t samples = kDefaultSampleCount;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  bool force_sample = false;
};

enum class Outcome { holds, refuted, budget_exhausted };
enum class RunMode { exhaustive, sampled };

std::string to_string(Outcome outcome);
std::string to_string(RunMode mode);

enum class MinorOp { delete_edge, contract_edge, delete_vertex };

/// One step of a minor sequence. Contraction merges `v` into `u`; vertex
/// deletion ignores `v`.
struct MinorStep {
  MinorOp op = MinorOp::delete_edge;
  VertexLabel u;
  VertexLabel v;

  bool operator==(const MinorStep&) const = default;
};

std::string to_string(MinorOp op);
Graph apply_minor_step(const Graph& g, const MinorStep& step);

/// Self-contained evidence for a refutation (or a positive packing claim).
///
///  - deletion:       `host - deleted` has no `pattern` expansion satisfying `constraints`
///  - embedding:      `embeddings[0]` is a `pattern` expansion in `host` satisfying `constraints`
///  - packing:        `embeddings` are pairwise edge-disjoint `pattern` expansions in `host`
///  - minor-sequence: `pattern` is not a minor of `host` but is one of `host` after `steps`
///  - branch-count:   g_times(host, context, r) has `observed` vertices of degree >= 3,
///                    while `host` has `expected` branch vertices in `context`
struct Witness {
  std::string kind;
  Graph pattern;
  Graph host;
  Graph context;
  EdgeSet deleted;
  EmbeddingConstraints constraints;
  std::vector<MinorEmbedding> embeddings;
  std::vector<MinorStep> steps;
  int r = 0;
  std::size_t expected = 0;
  std::size_t observed = 0;
};

/// Re-checks a witness from scratch, using only the graph, embedding and
/// search primitives. Deletion witnesses need an exhaustive search, so this
/// returns false when `node_budget` runs out.
bool verify_witness(const Witness& w, std::uint64_t node_budget = kDefaultNodeBudget);

struct Stats {
  std::uint64_t subsets_checked = 0;
  std::uint64_t search_nodes = 0;
  double elapsed_ms = 0;  // reported in text output only
};

struct Report {
  std::string claim;
  Outcome outcome = Outcome::holds;
  RunMode mode = RunMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  Stats stats;
  std::optional<Witness> witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// JSON form of a report. Elapsed time is omitted so equal runs serialize identically.
nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const Witness& witness);
Witness witness_from_json(const nlohmann::json& j);
std::string to_text(const Report& report);

struct PackingResult {
  std::size_t count = 0;
  std::vector<MinorEmbedding> witness;
  bool exhaustive = true;  // false: some search ran out of budget, count is a lower bound
  std::uint64_t nodes = 0;
  std::size_t minimal_footprints = 0;
};

/// Largest t <= cap such that g holds t pairwise edge-disjoint h-expansions.
/// Works on the family of inclusion-minimal edge sets carrying an
/// h-expansion. Throws GraphError when g has more than 64 edges or vertices.
PackingResult max_edge_disjoint_packing(const Graph& h, const Graph& g, std::size_t cap,
                                        const Budget& budget = {});

struct HittingResult {
  SearchStatus status = SearchStatus::none;  // found: `set` hits every expansion
  EdgeSet set;
  std::uint64_t subsets_checked = 0;
  std::uint64_t nodes = 0;
};

/// Smallest X with |X| <= bound such that g - X has no h-expansion, trying
/// subsets by size and then lexicographically.
HittingResult min_edge_hitting_set(const Graph& h, const Graph& g, std::size_t bound,
                                   const Budget& budget = {});

/// Every X with |X| <= max_deleted (or a seeded sample when there are too
/// many) leaves a `pattern` expansion satisfying `constraints` in host - X.
Report check_deletion_robustness(const Graph& pattern, const Graph& host, int max_deleted,
                                 const EmbeddingConstraints& constraints, const Budget& budget,
                                 std::string claim);

/// Robustness of g_times(g, ctx, r) against r - 1 deleted edges.
Report check_gadget_robustness(const Graph& g, const Graph& ctx, int r, const Budget& budget = {});

/// h-expansions survive every deletion of at most r - 1 edges of hstar.
Report check_hstar_robustness(const Graph& hstar, const Graph& h, int r, const Budget& budget = {});

/// Looks for an h-expansion in hstar that avoids the A* region in every copy
/// of a inside h: the groups are a itself plus the components (a a component
/// of h) or blocks (a a block of h) that contain a as a minor, and a
/// violation is an embedding where each group has a vertex whose branch set
/// misses the region entirely.
Report check_expansion_locality(const Graph& h, const Graph& hstar, const Graph& a,
                                const std::vector<VertexLabel>& region, const Budget& budget = {});

/// (i) fewer than spec.k edge-disjoint a-expansions in spec.astar and
/// (ii) rooted robustness against spec.r - 1 deletions.
Report check_generic_counterexample(const Graph& a, const AstarSpec& spec, const Budget& budget = {});

/// Vertices of degree >= 3 in g_times(g, ctx, r) against branch_vertices(g, ctx).
/// Throws GraphError for r < 3.
Report check_branch_count(const Graph& g, const Graph& ctx, int r);

/// For every corpus graph lacking the property, `trials` random minor
/// sequences; a minor with the property refutes.
Report check_hereditary_sampled(const PropertyPredicate& pred, const std::vector<Graph>& corpus,
                                std::uint64_t trials, std::uint64_t seed, const Budget& budget = {});

}  // namespace epw
