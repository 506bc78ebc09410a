#include <cctype>
#include <charconv>

#include "json.hpp"
#include "nesto/graph.hpp"

namespace nesto {

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer 'n'", 0);
  const auto n = j["n"].get<long long>();
  if (n < 0) throw ParseError("'n' must be non-negative", 0);
  require_capacity(n <= Graph::kMaxVertices, "graph has " + std::to_string(n) + " vertices; limit is " +
                                                 std::to_string(Graph::kMaxVertices));
  Graph g(static_cast<int>(n));
  if (!j.contains("edges")) return g;
  const auto& edges = j["edges"];
  if (!edges.is_array()) throw ParseError("'edges' must be an array", 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge #" + std::to_string(i + 1) + " must be a pair of integers", i);
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u == v) throw ParseError("edge #" + std::to_string(i + 1) + " is a loop", i);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("edge #" + std::to_string(i + 1) + " has an endpoint outside 1.." + std::to_string(n), i);
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return g;
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u + 1, v + 1});
  return j.dump();
}

// graph6: N(n) as one byte n+63 for n <= 62, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant first, zero padded, each byte offset by 63.
Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(">>graph6<<")) pos = 10;
  if (pos >= line.size()) throw ParseError("empty graph6 string", pos);
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(line[i]); };
  if (byte(pos) == 126) throw CapacityError("graph6 header encodes n >= 63; limit is 32 vertices");
  if (byte(pos) < 63 || byte(pos) > 126) throw ParseError("invalid graph6 size byte", pos);
  const int n = byte(pos) - 63;
  require_capacity(n <= Graph::kMaxVertices,
                   "graph6 graph has " + std::to_string(n) + " vertices; limit is 32");
  ++pos;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     pos);
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      if (byte(at) < 63 || byte(at) > 126) throw ParseError("invalid graph6 data byte", at);
      if (((byte(at) - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    const std::size_t at = pos + k / 6;
    if (((byte(at) - 63) >> (5 - k % 6)) & 1) throw ParseError("non-zero graph6 padding", at);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.size();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    ++line_no;
    if (line.starts_with(">>graph6<<") && line.size() == 10) line = {};
    if (!line.empty() && line[0] != '#' && !(line[0] == '>' && !line.starts_with(">>graph6<<"))) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.detail(), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

Graph parse_graph_spec(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.starts_with("{")) return parse_graph_json(text);
  if (text.starts_with("g6:")) return parse_graph6(text.substr(3));
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("graph argument '" + std::string(text) + "' is not kind:n, JSON or g6:<graph6>", 0);
  const GraphFamily kind = parse_family(text.substr(0, colon));
  int n = 0;
  const auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("bad vertex count '" + std::string(digits) + "'", colon + 1);
  require_capacity(n <= Graph::kMaxVertices, "graph shorthand asks for " + std::to_string(n) + " vertices");
  return family_graph(kind, n);
}

Graph parse_graph_text(std::string_view content) {
  std::size_t i = 0;
  while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
  if (i < content.size() && content[i] == '{') return parse_graph_json(content);
  auto graphs = parse_graph6_lines(content);
  if (graphs.empty()) throw ParseError("no graph found", 0);
  return graphs.front();
}

std::string edge_list_string(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u + 1);
    if (g.size() >= 10) out += '-';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace nesto
