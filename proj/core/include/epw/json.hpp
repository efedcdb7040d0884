#pragma once

// JSON encodings of the core value types, used by reports, witness files and
// the command line front end.

#include <nlohmann/json.hpp>

#include "epw/decomposition.hpp"
#include "epw/graph.hpp"
#include "epw/minor.hpp"

namespace epw {

using ojson = nlohmann::ordered_json;

ojson to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

ojson to_json(const LabelEdge& e);
ojson to_json(const EdgeSet& edges);
EdgeSet edges_from_json(const nlohmann::json& j);

ojson to_json(const MinorEmbedding& m);
MinorEmbedding embedding_from_json(const nlohmann::json& j);

ojson to_json(const EmbeddingConstraints& c);
EmbeddingConstraints constraints_from_json(const nlohmann::json& j);

ojson to_json(const BlockCutTree& t);
ojson to_json(const Segment& s);

}  // namespace epw
