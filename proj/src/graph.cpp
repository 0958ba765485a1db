#include "copnc/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace copnc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kMalformed: return "Malformed";
    case ErrorKind::kNonCubic: return "NonCubic";
    case ErrorKind::kBadParameter: return "BadParameter";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kCycle: return "CycleError";
    case ErrorKind::kNotOdd: return "NotOdd";
    case ErrorKind::kNotConformal: return "NotConformalInput";
    case ErrorKind::kBadBranch: return "BadBranch";
    case ErrorKind::kPrecondition: return "PreconditionFailed";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kSearchExhausted: return "SearchExhausted";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

const char* to_string(Color c) noexcept {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kBlue: return "blue";
    case Color::kYellow: return "yellow";
  }
  return "?";
}

CubicGraph CubicGraph::build(std::size_t n, std::span<const Endpoints> edges) {
  std::vector<std::vector<Slot>> incidence(n);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge " << e << " (" << u << "," << v << ") references a vertex outside 0.." << n;
      throw Error(ErrorKind::kMalformed, msg.str());
    }
    incidence[u].push_back(Slot{e, 0});
    incidence[v].push_back(Slot{e, 1});
  }
  for (VertexId v = 0; v < n; ++v) {
    if (incidence[v].size() != 3) {
      std::ostringstream msg;
      msg << "NonCubic(" << v << ", " << incidence[v].size() << ")";
      throw Error(ErrorKind::kNonCubic, msg.str());
    }
  }
  CubicGraph g;
  g.edges_.assign(edges.begin(), edges.end());
  g.slots_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::sort(incidence[v].begin(), incidence[v].end());
    std::copy(incidence[v].begin(), incidence[v].end(), g.slots_[v].begin());
  }
  return g;
}

bool CubicGraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Endpoints& p) { return p.first == p.second; });
}

bool CubicGraph::is_simple() const {
  if (has_loop()) return false;
  std::vector<Endpoints> sorted;
  sorted.reserve(edges_.size());
  for (auto [u, v] : edges_) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool CubicGraph::has_triangle() const {
  for (const auto& [a, b] : edges_) {
    if (a == b) continue;
    for (VertexId c : neighbors(a)) {
      if (c == a || c == b) continue;
      if (edge_between(b, c)) return true;
    }
  }
  return false;
}

Slot CubicGraph::slot_at(EdgeId e, VertexId v) const {
  return Slot{e, static_cast<std::uint8_t>(edges_[e].first == v ? 0 : 1)};
}

std::optional<EdgeId> CubicGraph::edge_between(VertexId u, VertexId v) const {
  for (Slot s : slots_[u]) {
    if (other_end(s.edge, u) == v && (u != v || is_loop(s.edge))) return s.edge;
  }
  return std::nullopt;
}

std::array<VertexId, 3> CubicGraph::neighbors(VertexId v) const {
  std::array<VertexId, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = vertex_of(opposite(slots_[v][i]));
  return out;
}

std::optional<std::vector<std::uint8_t>> bipartition(const CubicGraph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.vertex_count(), kUnset);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbors(v)) {
        if (side[u] == kUnset) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<EdgeId> bridges(const CubicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int clock = 0;
  struct Frame {
    VertexId v;
    int parent_edge;
    int next;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < 3) {
        Slot s = g.slots(f.v)[f.next++];
        if (static_cast<int>(s.edge) == f.parent_edge || g.is_loop(s.edge)) continue;
        VertexId u = g.other_end(s.edge, f.v);
        if (order[u] < 0) {
          order[u] = low[u] = clock++;
          stack.push_back({u, static_cast<int>(s.edge), 0});
        } else {
          low[f.v] = std::min(low[f.v], order[u]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > order[parent]) out.push_back(static_cast<EdgeId>(done.parent_edge));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_matching(const CubicGraph& g, std::span<const EdgeId> m) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (EdgeId e : m) {
    if (e >= g.edge_count() || g.is_loop(e)) return false;
    ++cover[g.endpoints(e).first];
    ++cover[g.endpoints(e).second];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

bool match_from(const CubicGraph& g, std::vector<bool>& covered, PerfectMatching& current,
                const std::function<bool(const PerfectMatching&)>& visit) {
  auto it = std::find(covered.begin(), covered.end(), false);
  if (it == covered.end()) {
    PerfectMatching sorted = current;
    std::sort(sorted.begin(), sorted.end());
    return visit(sorted);
  }
  const auto v = static_cast<VertexId>(it - covered.begin());
  for (Slot s : g.slots(v)) {
    if (g.is_loop(s.edge)) continue;
    VertexId u = g.other_end(s.edge, v);
    if (covered[u]) continue;
    covered[v] = covered[u] = true;
    current.push_back(s.edge);
    bool keep_going = match_from(g, covered, current, visit);
    current.pop_back();
    covered[v] = covered[u] = false;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_perfect_matching(const CubicGraph& g,
                               const std::function<bool(const PerfectMatching&)>& visit) {
  std::vector<bool> covered(g.vertex_count(), false);
  PerfectMatching current;
  match_from(g, covered, current, visit);
}

std::vector<PerfectMatching> perfect_matchings(const CubicGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<PerfectMatching> first_perfect_matching(const CubicGraph& g) {
  std::optional<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    out = m;
    return false;
  });
  return out;
}

bool is_proper_coloring(const CubicGraph& g, std::span<const Color> coloring) {
  if (coloring.size() != g.edge_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unsigned seen = 0;
    for (Slot s : g.slots(v)) seen |= 1u << static_cast<unsigned>(coloring[s.edge]);
    if (seen != 0b111u) return false;
  }
  return true;
}

namespace {

class EdgeColorer {
 public:
  explicit EdgeColorer(const CubicGraph& g) : g_(g), color_(g.edge_count(), -1) {}

  std::optional<EdgeColoring> run() {
    if (g_.has_loop()) return std::nullopt;
    if (g_.edge_count() == 0) return EdgeColoring{};
    // Symmetry break: the three edges at vertex 0 get the three colours.
    for (int i = 0; i < 3; ++i) color_[g_.slots(0)[i].edge] = i;
    if (!consistent_at(0)) return std::nullopt;
    if (!extend()) return std::nullopt;
    EdgeColoring out(g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) out[e] = static_cast<Color>(color_[e]);
    return out;
  }

 private:
  unsigned used_at(VertexId v) const {
    unsigned mask = 0;
    for (Slot s : g_.slots(v)) {
      if (color_[s.edge] >= 0) mask |= 1u << color_[s.edge];
    }
    return mask;
  }

  bool consistent_at(VertexId v) const {
    unsigned mask = 0;
    for (Slot s : g_.slots(v)) {
      if (color_[s.edge] < 0) continue;
      unsigned bit = 1u << color_[s.edge];
      if (mask & bit) return false;
      mask |= bit;
    }
    return true;
  }

  bool extend() {
    int best = -1;
    int best_options = 4;
    unsigned best_mask = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[e] >= 0) continue;
      auto [u, v] = g_.endpoints(e);
      unsigned free = ~(used_at(u) | used_at(v)) & 0b111u;
      int options = __builtin_popcount(free);
      if (options < best_options) {
        best = static_cast<int>(e);
        best_options = options;
        best_mask = free;
        if (options == 0) return false;
      }
    }
    if (best < 0) return true;
    for (int c = 0; c < 3; ++c) {
      if (!(best_mask & (1u << c))) continue;
      color_[best] = c;
      if (extend()) return true;
    }
    color_[best] = -1;
    return false;
  }

  const CubicGraph& g_;
  std::vector<int> color_;
};

}  // namespace

std::optional<EdgeColoring> proper_3_edge_coloring(const CubicGraph& g) {
  return EdgeColorer(g).run();
}

int chromatic_index(const CubicGraph& g) { return proper_3_edge_coloring(g) ? 3 : 4; }

PerfectMatching color_class(const EdgeColoring& coloring, Color c) {
  PerfectMatching out;
  for (EdgeId e = 0; e < coloring.size(); ++e) {
    if (coloring[e] == c) out.push_back(e);
  }
  return out;
}

}  // namespace copnc
