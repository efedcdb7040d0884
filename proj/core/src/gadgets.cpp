#include "epw/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "epw/graph_io.hpp"
#include "epw/minor.hpp"

namespace epw {
namespace {

bool minor_of(const Graph& a, const Graph& b) {
  auto r = find_expansion(a, b);
  if (r.status == SearchStatus::budget_exhausted) throw GraphError("minor test exhausted its search budget");
  return r.status == SearchStatus::found;
}

std::vector<VertexLabel> sorted_labels(const Graph& g) { return g.labels(); }

/// Graph formed by the union of the given blocks.
Graph union_of_blocks(const std::vector<const Block*>& blocks) {
  std::set<VertexLabel> vertices;
  std::set<LabelEdge> edges;
  for (const auto* b : blocks) {
    vertices.insert(b->vertices.begin(), b->vertices.end());
    edges.insert(b->edges.begin(), b->edges.end());
  }
  return Graph::from_lists({vertices.begin(), vertices.end()}, {edges.begin(), edges.end()});
}

Graph copy_with_role(const Graph& g, const std::string& role) { return g.with_uniform_role(role); }

}  // namespace

AstarSpec load_astar_spec(std::string_view text) {
  // Locate the end of the edge-list block by counting content lines.
  std::vector<std::pair<std::size_t, std::string_view>> lines;  // (line number, raw text)
  {
    std::size_t pos = 0, number = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      lines.emplace_back(++number, text.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  auto tokens_of = [](std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
      if (tok.front() == '#') break;
      out.push_back(tok);
    }
    return out;
  };

  std::size_t needed = 0;
  std::size_t seen = 0;
  std::size_t graph_end = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].second);
    if (toks.empty()) continue;
    if (seen == 0) {
      if (toks.size() != 2) throw ParseError(lines[i].first, "spec must start with an 'n m' graph header");
      try {
        needed = 1 + std::stoul(toks[0]) + std::stoul(toks[1]);
      } catch (const std::exception&) {
        throw ParseError(lines[i].first, "malformed graph header");
      }
    }
    if (++seen == needed) {
      graph_end = i + 1;
      break;
    }
  }
  if (seen == 0) throw ParseError(1, "empty spec document");
  if (seen < needed) throw ParseError(lines.back().first, "graph block is truncated");

  std::size_t offset = 0;
  for (std::size_t i = 0; i < graph_end; ++i) offset += lines[i].second.size() + 1;
  AstarSpec spec;
  spec.astar = parse_graph(text.substr(0, std::min(offset, text.size())));

  bool have_k = false, have_r = false;
  for (std::size_t i = graph_end; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i].second);
    if (toks.empty()) continue;
    const auto line = lines[i].first;
    if (toks[0] == "root") {
      if (toks.size() != 4 || toks[2] != "->") throw ParseError(line, "root line must be 'root s -> s''");
      if (!spec.astar.contains(toks[3])) throw ParseError(line, "root target '" + toks[3] + "' is not a vertex of A*");
      if (!spec.roots.emplace(toks[1], toks[3]).second) throw ParseError(line, "root '" + toks[1] + "' given twice");
    } else if (toks[0] == "k" || toks[0] == "r") {
      if (toks.size() != 2) throw ParseError(line, "expected '" + toks[0] + " <int>'");
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line, "expected a positive integer");
      }
      if (value < 1) throw ParseError(line, toks[0] + " must be positive");
      if (toks[0] == "k") {
        spec.k = value;
        have_k = true;
      } else {
        spec.r = value;
        have_r = true;
      }
    } else {
      throw ParseError(line, "unexpected '" + toks[0] + "'");
    }
  }
  if (!have_k || !have_r) throw ParseError(lines.back().first, "spec needs both 'k' and 'r' lines");
  return spec;
}

std::string serialize_astar_spec(const AstarSpec& spec) {
  std::string out = serialize(spec.astar);
  for (const auto& [s, target] : spec.roots) out += "root " + s + " -> " + target + "\n";
  out += "k " + std::to_string(spec.k) + "\n";
  out += "r " + std::to_string(spec.r) + "\n";
  return out;
}

Graph g_times(const Graph& g, const Graph& ctx, int r) {
  if (r < 1) throw GraphError("g_times needs r >= 1");
  const auto segments = segment_decomposition(g, ctx);  // validates connectivity and branch vertices
  const auto branches = branch_vertices(g, ctx);

  std::vector<VertexLabel> vertices;
  std::vector<std::string> roles;
  std::vector<LabelEdge> edges;
  for (const auto& b : branches) {
    vertices.push_back(b);
    roles.push_back("copy-of(" + b + ")");
  }

  for (std::size_t k = 0; k < segments.size(); ++k) {
    const auto& s = segments[k];
    const std::string base = s.from + "-" + s.to + ".s" + std::to_string(k);
    std::size_t length = s.length();
    if (s.kind == SegmentKind::between) length = std::max<std::size_t>(length, 2);
    if (s.kind == SegmentKind::closed) length = std::max<std::size_t>(length, 3);

    for (int copy = 1; copy <= r; ++copy) {
      const std::string tag = to_string(s.kind) + "(" + base + ",copy" + std::to_string(copy) + ")";
      auto fresh = [&](std::size_t j) {
        VertexLabel label = base + "#" + std::to_string(copy) + "." + std::to_string(j);
        vertices.push_back(label);
        roles.push_back(tag);
        return label;
      };
      VertexLabel prev = s.from;
      // between/closed: length-1 fresh interior vertices, then back to the far branch copy;
      // pendant: length fresh vertices, the last one being the tip.
      const std::size_t fresh_count = s.kind == SegmentKind::pendant ? length : length - 1;
      for (std::size_t j = 1; j <= fresh_count; ++j) {
        auto next = fresh(j);
        edges.push_back(make_edge(prev, next));
        prev = next;
      }
      if (s.kind != SegmentKind::pendant) edges.push_back(make_edge(prev, s.to));
    }
  }
  std::set<VertexLabel> unique(vertices.begin(), vertices.end());
  if (unique.size() != vertices.size()) throw GraphError("g_times: derived label collides with an input label");
  return Graph::from_lists(std::move(vertices), edges, std::move(roles));
}

std::vector<VertexLabel> astar_region(const Graph& hstar) {
  std::vector<VertexLabel> out;
  for (int v = 0; v < static_cast<int>(hstar.order()); ++v) {
    if (hstar.role(v).starts_with("astar")) out.push_back(hstar.label(v));
  }
  return out;
}

nlohmann::ordered_json to_json(const BuildTrace& trace) {
  nlohmann::ordered_json j;
  j["mode"] = trace.mode == GadgetMode::theorem1 ? "theorem1" : "theorem2";
  j["r"] = trace.r;
  j["A"] = trace.a_vertices;
  if (trace.mode == GadgetMode::theorem2) {
    j["property_blocks"] = trace.property_blocks;
    j["T_P"] = trace.tp_blocks;
  }
  j["B"] = trace.b;
  j["C"] = trace.c;
  if (trace.mode == GadgetMode::theorem2) {
    j["D"] = trace.d;
    j["P"] = trace.p;
  }
  j["parts"] = trace.parts;
  auto ids = nlohmann::ordered_json::array();
  for (const auto& id : trace.identifications) ids.push_back({{"name", id.name}, {"members", id.members}});
  j["identifications"] = ids;
  j["warnings"] = trace.warnings;
  return j;
}

namespace {

Graph astar_part(const AstarSpec& spec) {
  std::vector<std::string> roles;
  std::set<VertexLabel> targets;
  for (const auto& [_, t] : spec.roots) targets.insert(t);
  for (const auto& v : spec.astar.labels()) roles.push_back(targets.contains(v) ? "astar-root" : "astar");
  return spec.astar.with_roles(std::move(roles));
}

}  // namespace

GadgetBuild h_star_components(const Graph& h, const Graph& a, const AstarSpec& spec, int r) {
  if (r < 1) throw GraphError("r must be positive");
  auto split = partition_components(h, a);  // throws when a is not a component
  if (classify_max_degree2(a) != Shape::has_degree3_vertex) {
    throw GraphError("A is a " + to_string(classify_max_degree2(a)) +
                     "; the construction needs a component with a vertex of degree >= 3");
  }

  GadgetBuild out;
  out.trace.mode = GadgetMode::theorem1;
  out.trace.r = r;
  out.trace.a_vertices = sorted_labels(a);

  std::vector<Graph> parts{astar_part(spec)};
  out.trace.parts.push_back("astar");
  for (std::size_t i = 0; i < split.not_containing.size(); ++i) {
    const auto& b = split.not_containing[i];
    out.trace.b.push_back(sorted_labels(b));
    for (int copy = 1; copy <= r; ++copy) {
      parts.push_back(copy_with_role(b, "B" + std::to_string(i) + "-copy" + std::to_string(copy)));
      out.trace.parts.push_back("B" + std::to_string(i) + " copy " + std::to_string(copy));
    }
  }
  for (std::size_t i = 0; i < split.containing.size(); ++i) {
    const auto& c = split.containing[i];
    out.trace.c.push_back(sorted_labels(c));
    parts.push_back(g_times(c, h, r));
    out.trace.parts.push_back("C" + std::to_string(i) + " gadget");
  }
  auto u = disjoint_union_with_identifications(parts);
  out.hstar = std::move(u.graph);
  out.trace.warnings = std::move(u.warnings);
  return out;
}

GadgetBuild h_star_blocks(const GadgetRecipe& recipe) {
  const Graph& h = recipe.h;
  const int r = recipe.r;
  if (!recipe.predicate) throw GraphError("block-wise construction needs a property predicate");
  if (!is_connected(h)) throw GraphError("block-wise construction needs a connected graph");
  if (r < 1) throw GraphError("r must be positive");

  GadgetBuild out;
  auto& trace = out.trace;
  trace.mode = GadgetMode::theorem2;
  trace.r = r;

  const auto tree = block_cut_tree(h);
  std::vector<std::size_t> marked;
  for (const auto& b : tree.blocks) {
    if (recipe.predicate->holds(b.graph())) {
      marked.push_back(b.id);
      trace.property_blocks.push_back(b.vertices);
    }
  }
  if (marked.empty()) throw GraphError("no block has property '" + recipe.predicate->name + "'");

  const auto tp = minimal_subtree(tree, marked);
  for (const auto& b : tp.blocks) trace.tp_blocks.push_back(b.vertices);
  const Block a = choose_leaf_block(tp);
  trace.a_vertices = a.vertices;
  if (a.trivial) throw GraphError("chosen leaf block is a single edge");
  const Graph a_graph = a.graph();

  std::vector<std::size_t> tc_marks{a.id};
  std::vector<const Block*> c_blocks;
  for (const auto& b : tree.blocks) {
    if (b.id != a.id && minor_of(a_graph, b.graph())) {
      c_blocks.push_back(&b);
      tc_marks.push_back(b.id);
      trace.c.push_back(b.vertices);
    }
  }
  const auto tc = minimal_subtree(tree, tc_marks);
  std::set<std::size_t> in_tc;
  for (const auto& b : tc.blocks) in_tc.insert(b.id);

  std::vector<const Block*> b_nontrivial, b_trivial, outside;
  for (const auto& b : tree.blocks) {
    if (!in_tc.contains(b.id)) {
      outside.push_back(&b);
    } else if (b.id != a.id && !minor_of(a_graph, b.graph())) {
      trace.b.push_back(b.vertices);
      (b.trivial ? b_trivial : b_nontrivial).push_back(&b);
    }
  }

  std::vector<Graph> d_components;
  if (!outside.empty()) d_components = connected_components(union_of_blocks(outside));
  std::vector<Graph> p_components;
  if (!b_trivial.empty()) p_components = connected_components(union_of_blocks(b_trivial));
  for (const auto& d : d_components) trace.d.push_back(d.labels());
  for (const auto& p : p_components) trace.p.push_back(p.labels());

  // roots must match the cutvertices of A exactly
  std::set<VertexLabel> s_set;
  for (const auto& c : tree.cutvertices) {
    if (a.contains(c)) s_set.insert(c);
  }
  std::set<VertexLabel> root_keys;
  for (const auto& [s, target] : recipe.spec.roots) {
    root_keys.insert(s);
    if (!recipe.spec.astar.contains(target)) throw GraphError("root target '" + target + "' is not a vertex of A*");
  }
  if (root_keys != s_set) throw GraphError("spec roots do not match the cutvertices of the leaf block");

  const bool needs_gadgets = !c_blocks.empty() || !b_nontrivial.empty() || !p_components.empty();
  if (needs_gadgets && r < 3) throw GraphError("block-wise construction with gadget parts needs r >= 3");

  // Assemble parts; `pieces` remembers which vertices of h each part copies.
  std::vector<Graph> parts{astar_part(recipe.spec)};
  std::vector<std::set<VertexLabel>> part_source{{}};
  std::vector<int> part_piece{-1};
  std::vector<std::set<VertexLabel>> pieces{std::set<VertexLabel>(a.vertices.begin(), a.vertices.end())};
  trace.parts.push_back("astar");

  auto add_piece = [&](const std::vector<VertexLabel>& vs) {
    pieces.emplace_back(vs.begin(), vs.end());
    return static_cast<int>(pieces.size()) - 1;
  };
  for (std::size_t i = 0; i < c_blocks.size(); ++i) {
    const int piece = add_piece(c_blocks[i]->vertices);
    parts.push_back(g_times(c_blocks[i]->graph(), h, r));
    part_piece.push_back(piece);
    trace.parts.push_back("C" + std::to_string(i) + " gadget");
  }
  for (std::size_t i = 0; i < d_components.size(); ++i) {
    const int piece = add_piece(d_components[i].labels());
    for (int copy = 1; copy <= r; ++copy) {
      parts.push_back(copy_with_role(d_components[i], "D" + std::to_string(i) + "-copy" + std::to_string(copy)));
      part_piece.push_back(piece);
      trace.parts.push_back("D" + std::to_string(i) + " copy " + std::to_string(copy));
    }
  }
  for (std::size_t i = 0; i < b_nontrivial.size(); ++i) {
    const int piece = add_piece(b_nontrivial[i]->vertices);
    parts.push_back(g_times(b_nontrivial[i]->graph(), h, r));
    part_piece.push_back(piece);
    trace.parts.push_back("B" + std::to_string(i) + " gadget");
  }
  for (std::size_t i = 0; i < p_components.size(); ++i) {
    const int piece = add_piece(p_components[i].labels());
    parts.push_back(g_times(p_components[i], h, r));
    part_piece.push_back(piece);
    trace.parts.push_back("P" + std::to_string(i) + " gadget");
  }

  // Copies of a vertex of h shared by two pieces (a cutvertex) are identified;
  // roots of A* join the copies of their cutvertex.
  std::vector<Identification> groups;
  for (const auto& v : h.labels()) {
    int owners = 0;
    for (const auto& piece : pieces) owners += piece.contains(v) ? 1 : 0;
    const bool is_root = s_set.contains(v);
    if (owners < 2 && !is_root) continue;

    Identification group;
    group.name = v;
    if (is_root) group.members.push_back(part_label(recipe.spec.roots.at(v), 0));
    for (std::size_t p = 1; p < parts.size(); ++p) {
      const int piece = part_piece[p];
      if (!pieces[static_cast<std::size_t>(piece)].contains(v)) continue;
      if (parts[p].contains(v)) {
        group.members.push_back(part_label(v, p));
      } else {
        trace.warnings.push_back("part '" + trace.parts[p] + "' has no copy of shared vertex '" + v + "'");
      }
    }
    if (!group.members.empty()) groups.push_back(std::move(group));
  }

  auto u = disjoint_union_with_identifications(parts, groups);
  trace.identifications = std::move(groups);
  trace.warnings.insert(trace.warnings.end(), u.warnings.begin(), u.warnings.end());
  out.hstar = std::move(u.graph);
  return out;
}

GadgetBuild build_gadget(const GadgetRecipe& recipe) {
  if (recipe.mode == GadgetMode::theorem2) return h_star_blocks(recipe);
  const auto comps = connected_components(recipe.h);
  for (const auto& c : comps) {
    if (c.contains(recipe.selector)) return h_star_components(recipe.h, c, recipe.spec, recipe.r);
  }
  throw GraphError("selector '" + recipe.selector + "' is not a vertex of h");
}

}  // namespace epw
