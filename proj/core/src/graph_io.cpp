#include "epw/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace epw {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    if (text[i] == '#') break;  // trailing comment
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

std::size_t to_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const std::size_t n = to_count(header.tokens[0], header.number);
  const std::size_t m = to_count(header.tokens[1], header.number);
  if (lines.size() < 1 + n + m) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " vertex lines and " +
                                              std::to_string(m) + " edge lines");
  }
  if (lines.size() > 1 + n + m) throw ParseError(lines[1 + n + m].number, "trailing content after edge list");

  std::vector<VertexLabel> vertices;
  std::vector<std::string> roles;
  std::set<VertexLabel> seen;
  bool any_role = false;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() > 2) throw ParseError(line.number, "vertex line must be 'label [role]'");
    if (!seen.insert(line.tokens[0]).second) throw ParseError(line.number, "duplicate vertex '" + line.tokens[0] + "'");
    vertices.push_back(line.tokens[0]);
    roles.push_back(line.tokens.size() == 2 ? line.tokens[1] : std::string{});
    any_role = any_role || line.tokens.size() == 2;
  }
  std::set<LabelEdge> edges;
  for (std::size_t i = 1 + n; i < 1 + n + m; ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    const auto& u = line.tokens[0];
    const auto& v = line.tokens[1];
    if (u == v) throw ParseError(line.number, "self-loop at '" + u + "'");
    if (!seen.contains(u) || !seen.contains(v)) throw ParseError(line.number, "edge references unknown vertex");
    if (!edges.insert(make_edge(u, v)).second) throw ParseError(line.number, "duplicate edge " + u + " " + v);
  }
  if (!any_role) roles.clear();
  return Graph::from_lists(std::move(vertices), {edges.begin(), edges.end()}, std::move(roles));
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) throw ParseError(1, "empty graph6 record");

  std::vector<int> bytes;
  for (char c : text) {
    int b = static_cast<unsigned char>(c) - 63;
    if (b < 0 || b > 63) throw ParseError(1, "invalid graph6 character");
    bytes.push_back(b);
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (bytes[0] < 63) {
    n = static_cast<std::size_t>(bytes[0]);
    pos = 1;
  } else if (bytes.size() >= 4 && bytes[1] < 63) {
    n = (static_cast<std::size_t>(bytes[1]) << 12) | (static_cast<std::size_t>(bytes[2]) << 6) |
        static_cast<std::size_t>(bytes[3]);
    pos = 4;
  } else {
    throw ParseError(1, "graph6 records with more than 258047 vertices are not supported");
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (bytes.size() - pos != (bits + 5) / 6) throw ParseError(1, "graph6 record has the wrong length");

  std::vector<VertexLabel> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  std::vector<LabelEdge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = bytes[pos + k / 6];
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(make_edge(vertices[i], vertices[j]));
    }
  }
  return Graph::from_lists(std::move(vertices), edges);
}

std::string serialize(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::edge_list) {
    out << g.order() << ' ' << g.size() << '\n';
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
      out << g.label(v);
      if (g.has_provenance() && !g.role(v).empty()) out << ' ' << g.role(v);
      out << '\n';
    }
    for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    return out.str();
  }
  out << "graph {\n";
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    out << "  " << dot_quote(g.label(v));
    if (g.has_provenance()) out << " [role=" << dot_quote(g.role(v)) << "]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  " << dot_quote(g.label(e.u)) << " -- " << dot_quote(g.label(e.v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph_file(const std::filesystem::path& path) {
  auto text = read_text_file(path);
  if (path.extension() == ".g6") return parse_graph6(text);
  return parse_graph(text);
}

}  // namespace epw
