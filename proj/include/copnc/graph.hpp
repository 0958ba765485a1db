#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copnc/error.hpp"

namespace copnc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One end of an edge. Every vertex of a cubic graph owns exactly three slots;
/// a loop at v occupies two of them.
struct Slot {
  EdgeId edge = 0;
  std::uint8_t end = 0;  // 0 -> first endpoint, 1 -> second endpoint

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Cubic multigraph with identity-bearing edges. Immutable once built.
class CubicGraph {
 public:
  using Endpoints = std::pair<VertexId, VertexId>;

  CubicGraph() = default;

  /// Throws Error(kNonCubic) naming the first vertex whose degree (loops
  /// counted twice) differs from 3, or Error(kMalformed) for a bad endpoint.
  static CubicGraph build(std::size_t n, std::span<const Endpoints> edges);

  std::size_t vertex_count() const { return slots_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }
  const std::vector<Endpoints>& edges() const { return edges_; }

  /// Slots of v, ordered by (edge id, end).
  const std::array<Slot, 3>& slots(VertexId v) const { return slots_[v]; }

  VertexId vertex_of(Slot s) const {
    return s.end == 0 ? edges_[s.edge].first : edges_[s.edge].second;
  }
  Slot opposite(Slot s) const { return Slot{s.edge, static_cast<std::uint8_t>(1 - s.end)}; }
  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

  bool is_loop(EdgeId e) const { return edges_[e].first == edges_[e].second; }
  bool has_loop() const;
  bool is_simple() const;
  bool has_triangle() const;

  /// Slot of e at v; for a loop this is end 0.
  Slot slot_at(EdgeId e, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  std::array<VertexId, 3> neighbors(VertexId v) const;

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.edges_ == b.edges_ && a.slots_.size() == b.slots_.size();
  }

 private:
  std::vector<Endpoints> edges_;
  std::vector<std::array<Slot, 3>> slots_;
};

enum class Color : std::uint8_t { kRed = 0, kBlue = 1, kYellow = 2 };
inline constexpr std::array<Color, 3> kColors = {Color::kRed, Color::kBlue, Color::kYellow};
const char* to_string(Color c) noexcept;

/// Sorted edge ids; covers each vertex exactly once and contains no loop.
using PerfectMatching = std::vector<EdgeId>;

/// Indexed by EdgeId. Proper when the three slots of every vertex carry three
/// distinct colours.
using EdgeColoring = std::vector<Color>;

// --- text formats -----------------------------------------------------------

/// graph6 for simple graphs. Edges come out in lexicographic (u < v) order.
CubicGraph parse_graph6(std::string_view line);
std::string to_graph6(std::size_t n, std::span<const CubicGraph::Endpoints> edges);
std::string to_graph6(const CubicGraph& g);

/// Multigraph edge list: header "n m", then m lines "u v". Multiple graphs in
/// one stream are separated by blank lines.
CubicGraph parse_edge_list(std::string_view text);
std::vector<CubicGraph> parse_edge_lists(std::string_view text);
std::string to_edge_list(const CubicGraph& g);

// --- generators -------------------------------------------------------------

/// Named generators: k4, theta, k33, cube, prism, petersen, flower (k odd >= 3),
/// goldberg (k odd >= 3). Vertex numbering is fixed; see README.
CubicGraph generate(std::string_view family, std::optional<int> k = std::nullopt);
CubicGraph flower(int k);
CubicGraph goldberg(int k);

/// Flower snark vertex naming: u_i, v_i, w_i, t_i with 1 <= i <= k.
struct FlowerNames {
  int k;
  VertexId u(int i) const { return static_cast<VertexId>(i - 1); }
  VertexId v(int i) const { return static_cast<VertexId>(k + i - 1); }
  VertexId w(int i) const { return static_cast<VertexId>(2 * k + i - 1); }
  VertexId t(int i) const { return static_cast<VertexId>(3 * k + i - 1); }
};

/// Goldberg snark vertex naming: v_i^j with 1 <= i <= 8, 0 <= j < k.
inline VertexId goldberg_vertex(int i, int j) { return static_cast<VertexId>(8 * j + i - 1); }

// --- classical subroutines --------------------------------------------------

/// BFS 2-colouring; side[v] in {0,1}. nullopt when an odd cycle or loop exists.
std::optional<std::vector<std::uint8_t>> bipartition(const CubicGraph& g);
inline bool is_bipartite(const CubicGraph& g) { return bipartition(g).has_value(); }

/// Cut edges, ascending.
std::vector<EdgeId> bridges(const CubicGraph& g);
inline bool is_bridgeless(const CubicGraph& g) { return bridges(g).empty(); }

bool is_perfect_matching(const CubicGraph& g, std::span<const EdgeId> m);

/// Enumerates every perfect matching by backtracking on the lowest uncovered
/// vertex. The visitor returns false to stop early.
void for_each_perfect_matching(const CubicGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> perfect_matchings(const CubicGraph& g);
std::optional<PerfectMatching> first_perfect_matching(const CubicGraph& g);

bool is_proper_coloring(const CubicGraph& g, std::span<const Color> coloring);
std::optional<EdgeColoring> proper_3_edge_coloring(const CubicGraph& g);
int chromatic_index(const CubicGraph& g);
/// Edges of one colour class, ascending.
PerfectMatching color_class(const EdgeColoring& coloring, Color c);

}  // namespace copnc
