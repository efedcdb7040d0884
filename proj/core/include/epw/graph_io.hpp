#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "epw/graph.hpp"

namespace epw {

enum class GraphFormat { edge_list, dot };

// Edge-list document:
//
//   n m
//   <n vertex lines: label [role]>
//   <m edge lines:   u v>
//
// Blank lines and lines starting with '#' are skipped; a '#' preceded by
// whitespace starts a trailing comment. The optional role token carries
// provenance and is written back by serialize().
Graph parse_graph(std::string_view text);

/// Reads one graph6 record (optionally prefixed with the >>graph6<< header).
/// Vertices are labeled "0" .. "n-1".
Graph parse_graph6(std::string_view text);

std::string serialize(const Graph& g, GraphFormat format = GraphFormat::edge_list);

/// Dispatches on extension: ".g6" is graph6, everything else is an edge list.
Graph load_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace epw
