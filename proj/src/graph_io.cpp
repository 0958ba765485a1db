#include <algorithm>
#include <charconv>
#include <sstream>

#include "copnc/graph.hpp"

namespace copnc {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::kMalformed, what); }

}  // namespace

CubicGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) malformed("graph6: empty line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) malformed("graph6: byte out of range at position " + std::to_string(i));
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = static_cast<unsigned char>(line[0]) - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || static_cast<unsigned char>(line[1]) == 126) {
      malformed("graph6: unsupported vertex count encoding");
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (static_cast<unsigned char>(line[i]) - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t needed = (bits + 5) / 6;
  if (line.size() - pos != needed) {
    malformed("graph6: expected " + std::to_string(needed) + " data bytes, got " +
              std::to_string(line.size() - pos));
  }
  std::vector<CubicGraph::Endpoints> edges;
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned char>(line[pos + k / 6]) - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  return CubicGraph::build(n, edges);
}

std::string to_graph6(std::size_t n, std::span<const CubicGraph::Endpoints> edges) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<bool> adj(n * n, false);
  for (auto [u, v] : edges) {
    if (u == v) throw Error(ErrorKind::kBadParameter, "graph6 cannot encode loops");
    if (adj[u * n + v]) throw Error(ErrorKind::kBadParameter, "graph6 cannot encode parallel edges");
    adj[u * n + v] = adj[v * n + u] = true;
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i * n + j] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_graph6(const CubicGraph& g) { return to_graph6(g.vertex_count(), g.edges()); }

namespace {

std::vector<std::vector<long>> numeric_lines(std::string_view text) {
  std::vector<std::vector<long>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    std::vector<long> fields;
    while (!line.empty()) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
      if (ec != std::errc{} || value < 0) malformed("edge list: bad number in '" + std::string(line) + "'");
      fields.push_back(value);
      line = trim(line.substr(static_cast<std::size_t>(ptr - line.data())));
    }
    lines.push_back(std::move(fields));
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::vector<CubicGraph> parse_edge_lists(std::string_view text) {
  auto lines = numeric_lines(text);
  std::vector<CubicGraph> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].empty()) {
      ++i;
      continue;
    }
    if (lines[i].size() != 2) malformed("edge list: header must be 'n m' (line " + std::to_string(i + 1) + ")");
    const auto n = static_cast<std::size_t>(lines[i][0]);
    const auto m = static_cast<std::size_t>(lines[i][1]);
    std::vector<CubicGraph::Endpoints> edges;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t at = i + 1 + k;
      if (at >= lines.size() || lines[at].size() != 2) {
        malformed("edge list: expected 'u v' at line " + std::to_string(at + 1));
      }
      edges.emplace_back(static_cast<VertexId>(lines[at][0]), static_cast<VertexId>(lines[at][1]));
    }
    out.push_back(CubicGraph::build(n, edges));
    i += m + 1;
  }
  return out;
}

CubicGraph parse_edge_list(std::string_view text) {
  auto graphs = parse_edge_lists(text);
  if (graphs.size() != 1) malformed("edge list: expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string to_edge_list(const CubicGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace copnc
