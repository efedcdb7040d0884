#include "epw/json.hpp"

namespace epw {

ojson to_json(const Graph& g) {
  ojson j;
  j["vertices"] = g.labels();
  j["edges"] = to_json(g.label_edges());
  if (g.has_provenance()) j["roles"] = g.roles();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    auto vertices = j.at("vertices").get<std::vector<VertexLabel>>();
    auto edges = edges_from_json(j.at("edges"));
    std::vector<std::string> roles;
    if (j.contains("roles")) roles = j.at("roles").get<std::vector<std::string>>();
    return Graph::from_lists(std::move(vertices), edges, std::move(roles));
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
}

ojson to_json(const LabelEdge& e) { return ojson::array({e.u, e.v}); }

ojson to_json(const EdgeSet& edges) {
  ojson j = ojson::array();
  for (const auto& e : edges) j.push_back(to_json(e));
  return j;
}

EdgeSet edges_from_json(const nlohmann::json& j) {
  EdgeSet out;
  try {
    for (const auto& e : j) {
      if (e.size() != 2) throw GraphError("edge entries must be [u, v] pairs");
      out.push_back(make_edge(e[0].get<std::string>(), e[1].get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed edge list JSON: ") + e.what());
  }
  return out;
}

ojson to_json(const MinorEmbedding& m) {
  ojson j;
  ojson sets = ojson::object();
  for (const auto& [x, s] : m.branch_sets) sets[x] = s;
  j["branch_sets"] = sets;
  ojson images = ojson::array();
  for (const auto& [he, ge] : m.edge_map) images.push_back({{"pattern", to_json(he)}, {"host", to_json(ge)}});
  j["edge_map"] = images;
  j["tree_edges"] = to_json(m.tree_edges);
  return j;
}

MinorEmbedding embedding_from_json(const nlohmann::json& j) {
  MinorEmbedding m;
  try {
    for (const auto& [x, s] : j.at("branch_sets").items()) m.branch_sets[x] = s.get<std::vector<VertexLabel>>();
    for (const auto& entry : j.at("edge_map")) {
      const auto he = edges_from_json(nlohmann::json::array({entry.at("pattern")}));
      const auto ge = edges_from_json(nlohmann::json::array({entry.at("host")}));
      m.edge_map[he.front()] = ge.front();
    }
    if (j.contains("tree_edges")) m.tree_edges = edges_from_json(j.at("tree_edges"));
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed embedding JSON: ") + e.what());
  }
  return m;
}

ojson to_json(const EmbeddingConstraints& c) {
  ojson j = ojson::object();
  if (!c.must_contain.empty()) {
    ojson must = ojson::object();
    for (const auto& [x, v] : c.must_contain) must[x] = v;
    j["must_contain"] = must;
  }
  auto regions = [](const std::map<VertexLabel, std::vector<VertexLabel>>& m) {
    ojson out = ojson::object();
    for (const auto& [x, r] : m) out[x] = r;
    return out;
  };
  if (!c.allowed_region.empty()) j["allowed_region"] = regions(c.allowed_region);
  if (!c.forbidden_region.empty()) j["forbidden_region"] = regions(c.forbidden_region);
  return j;
}

EmbeddingConstraints constraints_from_json(const nlohmann::json& j) {
  EmbeddingConstraints c;
  try {
    if (j.contains("must_contain")) {
      for (const auto& [x, v] : j.at("must_contain").items()) c.must_contain[x] = v.get<std::string>();
    }
    if (j.contains("allowed_region")) {
      for (const auto& [x, r] : j.at("allowed_region").items()) c.allowed_region[x] = r.get<std::vector<VertexLabel>>();
    }
    if (j.contains("forbidden_region")) {
      for (const auto& [x, r] : j.at("forbidden_region").items()) c.forbidden_region[x] = r.get<std::vector<VertexLabel>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed constraints JSON: ") + e.what());
  }
  return c;
}

ojson to_json(const BlockCutTree& t) {
  ojson j;
  ojson blocks = ojson::array();
  for (const auto& b : t.blocks) {
    blocks.push_back({{"id", b.id}, {"vertices", b.vertices}, {"edges", to_json(b.edges)}, {"trivial", b.trivial}});
  }
  j["blocks"] = blocks;
  j["cutvertices"] = t.cutvertices;
  ojson tree = ojson::array();
  for (const auto& [b, c] : t.tree_edges) tree.push_back({{"block", b}, {"cutvertex", c}});
  j["tree_edges"] = tree;
  return j;
}

ojson to_json(const Segment& s) {
  return {{"kind", to_string(s.kind)}, {"from", s.from}, {"to", s.to}, {"internal", s.internal}, {"length", s.length()}};
}

}  // namespace epw
