#include "copnc/construct.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "copnc/search.hpp"
#include "copnc/switching.hpp"

namespace copnc {

namespace {

struct CycleWalk {
  std::vector<VertexId> vertices;
  std::vector<Slot> leave;   // slot by which each vertex is left
  std::vector<Slot> arrive;  // slot by which each vertex is entered
};

std::vector<CycleWalk> walk_two_factor(const CubicGraph& g, const PerfectMatching& m) {
  std::vector<bool> in_m(g.edge_count(), false);
  for (EdgeId e : m) in_m[e] = true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<CycleWalk> out;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    CycleWalk walk;
    std::optional<Slot> entered;
    VertexId at = start;
    while (true) {
      seen[at] = true;
      std::optional<Slot> leave;
      for (Slot s : g.slots(at)) {
        if (in_m[s.edge] || (entered && s == *entered)) continue;
        if (!leave || s.edge < leave->edge) leave = s;
      }
      walk.vertices.push_back(at);
      walk.leave.push_back(*leave);
      const Slot next = g.opposite(*leave);
      entered = next;
      at = g.vertex_of(next);
      if (at == start) break;
    }
    walk.arrive.resize(walk.vertices.size());
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
      walk.arrive[(i + 1) % walk.vertices.size()] = g.opposite(walk.leave[i]);
    }
    out.push_back(std::move(walk));
  }
  return out;
}

void require_matching(const CubicGraph& g, const PerfectMatching& m) {
  if (!is_perfect_matching(g, m)) throw Error(ErrorKind::kBadParameter, "not a perfect matching");
}

}  // namespace

std::vector<std::vector<VertexId>> two_factor_cycles(const CubicGraph& g, const PerfectMatching& m) {
  require_matching(g, m);
  std::vector<std::vector<VertexId>> out;
  for (auto& w : walk_two_factor(g, m)) out.push_back(std::move(w.vertices));
  return out;
}

Orientation orientation_with_flips(const CubicGraph& g, const PerfectMatching& m,
                                   const std::vector<bool>& flip) {
  require_matching(g, m);
  Orientation o;
  o.out.assign(g.vertex_count(), 0);
  const auto walks = walk_two_factor(g, m);
  for (std::size_t c = 0; c < walks.size(); ++c) {
    const bool reverse = c < flip.size() && flip[c];
    for (std::size_t i = 0; i < walks[c].vertices.size(); ++i) {
      o.out[walks[c].vertices[i]] = reverse ? walks[c].arrive[i].edge : walks[c].leave[i].edge;
    }
  }
  return o;
}

Orientation default_orientation(const CubicGraph& g, const PerfectMatching& m) {
  return orientation_with_flips(g, m, {});
}

NormalPartition nop_from_matching(const CubicGraph& g, const PerfectMatching& m,
                                  const Orientation* orientation) {
  require_matching(g, m);
  const Orientation o = orientation ? *orientation : default_orientation(g, m);
  std::vector<Trail> trails;
  for (EdgeId e : m) {
    auto [u, v] = g.endpoints(e);
    Trail t;
    t.vertices = {g.other_end(o.out[u], u), u, v, g.other_end(o.out[v], v)};
    t.edges = {o.out[u], e, o.out[v]};
    trails.push_back(std::move(t));
  }
  return make_partition(g, std::move(trails));
}

NormalPartition nop_from_matching(const CubicGraph& g) {
  auto m = first_perfect_matching(g);
  if (!m) throw Error(ErrorKind::kPrecondition, "NoMatching");
  return nop_from_matching(g, *m);
}

std::optional<std::string> check_conformal_triple(const CubicGraph& g, const ConformalTriple& t) {
  if (t.coloring.size() != g.edge_count() || !is_proper_coloring(g, t.coloring)) {
    return "colouring is not proper";
  }
  for (Color c : kColors) {
    const NormalPartition& p = t[c];
    if (p.marking().size() != g.vertex_count()) return "partition size mismatch";
    if (!is_odd(p)) return std::string(to_string(c)) + " partition is not odd";
    if (!is_conformal(p, color_class(t.coloring, c))) {
      return std::string(to_string(c)) + " partition is not conformal to its colour";
    }
  }
  if (!is_compatible_triple(t.partitions)) return "partitions are not compatible";
  return std::nullopt;
}

ConformalTriple bipartite_triple(const CubicGraph& g) {
  const auto side = bipartition(g);
  if (!side) throw Error(ErrorKind::kPrecondition, "NotBipartite");
  const auto m = first_perfect_matching(g);
  if (!m) throw Error(ErrorKind::kInvariantViolation, "bipartite cubic graph without a perfect matching");

  EdgeColoring coloring(g.edge_count(), Color::kRed);
  for (const auto& walk : walk_two_factor(g, *m)) {
    for (std::size_t i = 0; i < walk.leave.size(); ++i) {
      coloring[walk.leave[i].edge] = i % 2 == 0 ? Color::kBlue : Color::kYellow;
    }
  }
  std::vector<std::array<EdgeId, 3>> edge_of(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edge_of[g.endpoints(e).first][static_cast<int>(coloring[e])] = e;
    edge_of[g.endpoints(e).second][static_cast<int>(coloring[e])] = e;
  }

  auto build = [&](int middle) {
    const int before = (middle + 2) % 3, after = (middle + 1) % 3;
    std::vector<Trail> trails;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (static_cast<int>(coloring[e]) != middle) continue;
      auto [b, w] = g.endpoints(e);
      if ((*side)[b] != 0) std::swap(b, w);
      const EdgeId eb = edge_of[b][before], ew = edge_of[w][after];
      Trail t;
      t.vertices = {g.other_end(eb, b), b, w, g.other_end(ew, w)};
      t.edges = {eb, e, ew};
      trails.push_back(std::move(t));
    }
    return make_partition(g, std::move(trails));
  };
  ConformalTriple out{{build(0), build(1), build(2)}, coloring};
  if (auto why = check_conformal_triple(g, out)) throw Error(ErrorKind::kInvariantViolation, *why);
  return out;
}

// --- conformal_triple ---------------------------------------------------------

namespace {

enum Role { kR = 0, kB = 1, kY = 2 };
enum Place { kV, kW, kV1, kW2 };

struct Step {
  Role role;
  Place place;
};

using Sequence = std::vector<Step>;

// Improvement sequences, tried in order at a vertex v of the agreement set.
const std::vector<Sequence>& shrinking_sequences() {
  static const std::vector<Sequence> seqs = {
      {{kR, kV}},
      {{kR, kW}, {kR, kV}},
      {{kB, kW}, {kY, kW}, {kR, kW}, {kR, kV}},
      {{kB, kW}, {kY, kW}, {kR, kV1}, {kR, kW}, {kR, kV}, {kR, kV1}},
      {{kB, kV}, {kY, kV}},
      {{kB, kV}, {kY, kW2}, {kY, kV}},
      {{kB, kV}},
      {{kY, kV}},
  };
  return seqs;
}

// Moves that keep |A| but push the disagreement from v to w.
const std::vector<Sequence>& relocating_sequences() {
  static const std::vector<Sequence> seqs = {
      {{kR, kW}, {kR, kW}, {kB, kW}},
      {{kR, kW}, {kR, kV}, {kB, kW}},
  };
  return seqs;
}

struct Frame {
  std::array<int, 3> color;  // role -> colour index
  VertexId v, w, v1, w2;
};

std::optional<Frame> local_frame(const CubicGraph& g, const ConformalTriple& t, VertexId v) {
  int c1 = -1, c2 = -1;
  for (int a = 0; a < 3 && c1 < 0; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (t.partitions[a].marked(v) == t.partitions[b].marked(v)) {
        c1 = a;
        c2 = b;
        break;
      }
    }
  }
  if (c1 < 0) return std::nullopt;
  const int c3 = 3 - c1 - c2;
  const EdgeId yellow_mark = t.partitions[c3].marked_edge(v);
  if (static_cast<int>(t.coloring[yellow_mark]) != c1) std::swap(c1, c2);
  Frame f;
  f.color = {c1, c2, c3};
  auto edge_of = [&](VertexId x, int c) {
    for (Slot s : g.slots(x)) {
      if (static_cast<int>(t.coloring[s.edge]) == c) return s.edge;
    }
    return g.slots(x)[0].edge;
  };
  f.v = v;
  f.v1 = g.other_end(edge_of(v, c1), v);
  f.w = g.other_end(edge_of(v, c3), v);
  f.w2 = g.other_end(edge_of(f.w, c2), f.w);
  return f;
}

class TripleState {
 public:
  TripleState(const CubicGraph& g, ConformalTriple t) : g_(&g), t_(std::move(t)) {
    for (Color c : kColors) classes_[static_cast<int>(c)] = color_class(t_.coloring, c);
  }

  const ConformalTriple& triple() const { return t_; }
  std::size_t a_size() const { return triple_set(t_.partitions[0], t_.partitions[1], t_.partitions[2]).size(); }
  std::vector<VertexId> a_set() const { return triple_set(t_.partitions[0], t_.partitions[1], t_.partitions[2]); }

  bool conformal_move(int color, VertexId x) {
    auto q = conformal_switch(*g_, t_.partitions[color], classes_[color], x);
    if (!q) return false;
    t_.partitions[color] = std::move(*q);
    return true;
  }

  void reseed(int color, const Orientation& o) {
    t_.partitions[color] = nop_from_matching(*g_, classes_[color], &o);
  }

  const PerfectMatching& matching(int color) const { return classes_[color]; }

  std::vector<Slot> key() const {
    std::vector<Slot> k;
    for (const auto& p : t_.partitions) k.insert(k.end(), p.marking().begin(), p.marking().end());
    return k;
  }

 private:
  const CubicGraph* g_;
  ConformalTriple t_;
  std::array<PerfectMatching, 3> classes_;
};

bool apply_sequence(TripleState& s, const Frame& f, const Sequence& seq) {
  for (const Step& step : seq) {
    VertexId x = f.v;
    switch (step.place) {
      case kV: x = f.v; break;
      case kW: x = f.w; break;
      case kV1: x = f.v1; break;
      case kW2: x = f.w2; break;
    }
    if (!s.conformal_move(f.color[step.role], x)) return false;
  }
  return true;
}

// Proof-guided descent. Returns true when A becomes empty.
bool proof_stage(const CubicGraph& g, TripleState& state, std::set<std::vector<Slot>>& visited,
                 ConformalTelemetry& tel, std::size_t& moves, std::size_t budget) {
  while (moves < budget) {
    const auto a = state.a_set();
    if (a.empty()) return true;
    bool progressed = false;
    for (VertexId v : a) {
      auto frame = local_frame(g, state.triple(), v);
      if (!frame) continue;
      for (const auto& seq : shrinking_sequences()) {
        TripleState trial = state;
        moves += seq.size();
        if (apply_sequence(trial, *frame, seq) && trial.a_size() < a.size()) {
          state = std::move(trial);
          ++tel.proof_steps;
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (progressed) continue;
    for (VertexId v : a) {
      auto frame = local_frame(g, state.triple(), v);
      if (!frame) continue;
      for (const auto& seq : relocating_sequences()) {
        TripleState trial = state;
        moves += seq.size();
        if (apply_sequence(trial, *frame, seq) && trial.a_size() == a.size() &&
            visited.insert(trial.key()).second) {
          state = std::move(trial);
          ++tel.relocations;
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (!progressed) return false;
  }
  return false;
}

Orientation random_orientation(const CubicGraph& g, const PerfectMatching& m, std::mt19937_64& rng) {
  const std::size_t cycles = two_factor_cycles(g, m).size();
  std::vector<bool> flip(cycles);
  for (std::size_t i = 0; i < cycles; ++i) flip[i] = (rng() & 1) != 0;
  return orientation_with_flips(g, m, flip);
}

}  // namespace

ConformalTriple conformal_triple(const CubicGraph& g, const EdgeColoring& coloring,
                                 const ConformalOptions& options, ConformalTelemetry* telemetry) {
  if (coloring.size() != g.edge_count() || !is_proper_coloring(g, coloring)) {
    throw Error(ErrorKind::kPrecondition, "colouring is not a proper 3-edge-colouring");
  }
  ConformalTelemetry local;
  ConformalTelemetry& tel = telemetry ? *telemetry : local;
  tel = {};

  auto seed = [&](Color c) { return nop_from_matching(g, color_class(coloring, c)); };
  TripleState state(g, ConformalTriple{{seed(Color::kRed), seed(Color::kBlue), seed(Color::kYellow)}, coloring});
  tel.initial_a = state.a_size();
  if (tel.initial_a == 0) {
    tel.path = "seed";
    return state.triple();
  }

  std::set<std::vector<Slot>> visited{state.key()};
  std::size_t moves = 0;
  if (proof_stage(g, state, visited, tel, moves, options.move_budget)) {
    tel.path = "proof";
    return state.triple();
  }

  std::mt19937_64 rng(options.seed);
  std::size_t current = state.a_size();
  std::size_t since_improvement = 0;
  std::size_t best = current;
  while (moves < options.move_budget) {
    ++moves;
    ++tel.random_moves;
    const int color = static_cast<int>(rng() % 3);
    if (++since_improvement > 2000) {
      since_improvement = 0;
      state.reseed(color, random_orientation(g, state.matching(color), rng));
      ++tel.reseeds;
      current = state.a_size();
    } else {
      const VertexId x = static_cast<VertexId>(rng() % g.vertex_count());
      TripleState trial = state;
      if (!trial.conformal_move(color, x)) continue;
      const std::size_t next = trial.a_size();
      if (next > current && rng() % 20 != 0) continue;
      state = std::move(trial);
      current = next;
    }
    if (current == 0) {
      tel.path = "walk";
      return state.triple();
    }
    if (current < best) {
      best = current;
      since_improvement = 0;
      if (proof_stage(g, state, visited, tel, moves, options.move_budget)) {
        tel.path = "walk";
        return state.triple();
      }
      current = state.a_size();
    }
  }

  if (options.exhaustive_fallback) {
    tel.exhaustive = true;
    TripleOptions search;
    search.conformal = std::array<PerfectMatching, 3>{color_class(coloring, Color::kRed),
                                                      color_class(coloring, Color::kBlue),
                                                      color_class(coloring, Color::kYellow)};
    if (auto t = find_compatible_triple(g, search)) {
      tel.path = "exhaustive";
      return ConformalTriple{*t, coloring};
    }
  }
  throw Error(ErrorKind::kSearchExhausted, "SearchExhausted: no conformal compatible triple found");
}

// --- gadgets --------------------------------------------------------------------

namespace {

struct Located {
  std::size_t trail;
  std::size_t pos;
};

Located locate(const NormalPartition& p, EdgeId e) {
  for (std::size_t i = 0; i < p.trails().size(); ++i) {
    const auto& edges = p.trails()[i].edges;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k] == e) return {i, k};
    }
  }
  throw Error(ErrorKind::kInvariantViolation, "edge missing from partition");
}

// The trail containing e, oriented so that e is crossed from `from`.
Trail oriented_through(const NormalPartition& p, EdgeId e, VertexId from, std::size_t& pos,
                       std::size_t& index) {
  const Located at = locate(p, e);
  index = at.trail;
  Trail t = p.trails()[at.trail];
  pos = at.pos;
  if (t.vertices[pos] != from) {
    t = t.reversed();
    pos = t.length() - 1 - pos;
  }
  return t;
}

Trail slice(const Trail& t, std::size_t first_vertex, std::size_t last_vertex) {
  Trail out;
  out.vertices.assign(t.vertices.begin() + static_cast<std::ptrdiff_t>(first_vertex),
                      t.vertices.begin() + static_cast<std::ptrdiff_t>(last_vertex) + 1);
  out.edges.assign(t.edges.begin() + static_cast<std::ptrdiff_t>(first_vertex),
                   t.edges.begin() + static_cast<std::ptrdiff_t>(last_vertex));
  return out;
}

void extend(Trail& t, std::initializer_list<std::pair<EdgeId, VertexId>> steps) {
  for (auto [e, v] : steps) {
    t.edges.push_back(e);
    t.vertices.push_back(v);
  }
}

void append(Trail& t, const Trail& tail) {
  t.vertices.insert(t.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  t.edges.insert(t.edges.end(), tail.edges.begin(), tail.edges.end());
}

Trail single(VertexId a, EdgeId e, VertexId b) { return Trail{{a, b}, {e}}; }

std::vector<Trail> without(const NormalPartition& p, std::initializer_list<std::size_t> drop) {
  std::vector<Trail> out;
  for (std::size_t i = 0; i < p.trails().size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(p.trails()[i]);
  }
  return out;
}

void require_triple(const CubicGraph& g, const ConformalTriple& t) {
  if (auto why = check_conformal_triple(g, t)) {
    throw Error(ErrorKind::kNotConformal, "NotConformalTriple: " + *why);
  }
}

Extension finish(CubicGraph g, std::array<std::vector<Trail>, 3> trails, EdgeColoring coloring) {
  ConformalTriple t{{make_partition(g, std::move(trails[0])), make_partition(g, std::move(trails[1])),
                     make_partition(g, std::move(trails[2]))},
                    std::move(coloring)};
  if (auto why = check_conformal_triple(g, t)) {
    throw Error(ErrorKind::kInvariantViolation, "gadget produced an invalid triple: " + *why);
  }
  return Extension{std::move(g), std::move(t)};
}

}  // namespace

Extension digon_extend(const CubicGraph& g, EdgeId e, const ConformalTriple& t) {
  require_triple(g, t);
  if (e >= g.edge_count()) throw Error(ErrorKind::kBadParameter, "edge out of range");
  const int red = static_cast<int>(t.coloring[e]);

  // Blue role: a colour whose partition ends a trail with e; x is that end.
  int blue = -1;
  VertexId x = g.endpoints(e).first, y = g.endpoints(e).second;
  for (int c = 0; c < 3 && blue < 0; ++c) {
    if (c == red) continue;
    const NormalPartition& p = t.partitions[c];
    const Located at = locate(p, e);
    const Trail& tr = p.trails()[at.trail];
    if (at.pos == 0) {
      blue = c;
      x = tr.front();
    } else if (at.pos + 1 == tr.length()) {
      blue = c;
      x = tr.back();
    }
  }
  if (blue < 0) throw Error(ErrorKind::kInvariantViolation, "edge is internal in all three partitions");
  y = g.other_end(e, x);
  const int yellow = 3 - red - blue;

  const std::size_t n = g.vertex_count();
  const EdgeId m = static_cast<EdgeId>(g.edge_count());
  const VertexId u = static_cast<VertexId>(n), v = static_cast<VertexId>(n + 1);
  const EdgeId e1 = e, e2 = m, e3 = m + 1, e4 = m + 2;
  std::vector<CubicGraph::Endpoints> edges = g.edges();
  edges[e] = {x, u};
  edges.emplace_back(v, y);
  edges.emplace_back(u, v);
  edges.emplace_back(u, v);
  CubicGraph h = CubicGraph::build(n + 2, edges);
  EdgeColoring coloring = t.coloring;
  coloring.push_back(static_cast<Color>(red));
  coloring.push_back(static_cast<Color>(blue));
  coloring.push_back(static_cast<Color>(yellow));

  std::array<std::vector<Trail>, 3> out;
  std::size_t pos = 0, index = 0;

  {  // Red: split xey into x e1 u e3 v and y e2 v e4 u.
    Trail r = oriented_through(t.partitions[red], e, x, pos, index);
    Trail head = slice(r, 0, pos);
    extend(head, {{e1, u}, {e3, v}});
    Trail tail = slice(r, pos + 1, r.length()).reversed();
    extend(tail, {{e2, v}, {e4, u}});
    out[red] = without(t.partitions[red], {index});
    out[red].push_back(std::move(head));
    out[red].push_back(std::move(tail));
  }
  {  // Blue: x e1 u, and v e4 u e3 v e2 y followed by the rest of B.
    Trail b = oriented_through(t.partitions[blue], e, x, pos, index);
    Trail tail{{v}, {}};
    extend(tail, {{e4, u}, {e3, v}, {e2, y}});
    append(tail, slice(b, 1, b.length()));
    out[blue] = without(t.partitions[blue], {index});
    out[blue].push_back(single(x, e1, u));
    out[blue].push_back(std::move(tail));
  }
  {  // Yellow.
    const NormalPartition& p = t.partitions[yellow];
    const Located at = locate(p, e);
    const bool end_edge = at.pos == 0 || at.pos + 1 == p.trails()[at.trail].length();
    if (end_edge) {
      Trail yt = oriented_through(p, e, y, pos, index);
      if (pos != 0) throw Error(ErrorKind::kInvariantViolation, "yellow trail does not end at y");
      Trail head{{u}, {}};
      extend(head, {{e3, v}, {e4, u}, {e1, x}});
      append(head, slice(yt, 1, yt.length()));
      out[yellow] = without(p, {index});
      out[yellow].push_back(std::move(head));
      out[yellow].push_back(single(y, e2, v));
    } else {
      Trail yt = oriented_through(p, e, x, pos, index);
      Trail head = slice(yt, 0, pos);
      extend(head, {{e1, u}, {e4, v}, {e3, u}});
      Trail tail{{v}, {}};
      extend(tail, {{e2, y}});
      append(tail, slice(yt, pos + 1, yt.length()));
      out[yellow] = without(p, {index});
      out[yellow].push_back(std::move(head));
      out[yellow].push_back(std::move(tail));
    }
  }
  return finish(std::move(h), std::move(out), std::move(coloring));
}

Extension triangle_extend(const CubicGraph& g, VertexId v, const ConformalTriple& t) {
  require_triple(g, t);
  if (v >= g.vertex_count()) throw Error(ErrorKind::kBadParameter, "vertex out of range");
  const std::size_t n = g.vertex_count();
  const EdgeId m = static_cast<EdgeId>(g.edge_count());
  const std::array<Slot, 3> slots = g.slots(v);
  const std::array<VertexId, 3> corner = {v, static_cast<VertexId>(n), static_cast<VertexId>(n + 1)};

  std::vector<CubicGraph::Endpoints> edges = g.edges();
  for (int i = 1; i < 3; ++i) {
    auto& ends = edges[slots[i].edge];
    (slots[i].end == 0 ? ends.first : ends.second) = corner[i];
  }
  edges.emplace_back(corner[0], corner[1]);
  edges.emplace_back(corner[1], corner[2]);
  edges.emplace_back(corner[0], corner[2]);
  CubicGraph h = CubicGraph::build(n + 2, edges);

  // attach[c]: corner whose outer edge has colour c; tri[c]: triangle edge of
  // colour c, which is the one opposite attach[c].
  std::array<VertexId, 3> attach{};
  std::array<EdgeId, 3> tri{};
  const std::array<EdgeId, 3> opposite = {m + 1, m + 2, m};  // opposite corner 0, 1, 2
  EdgeColoring coloring = t.coloring;
  coloring.resize(m + 3);
  for (int i = 0; i < 3; ++i) {
    const int c = static_cast<int>(t.coloring[slots[i].edge]);
    attach[c] = corner[i];
    tri[c] = opposite[i];
    coloring[opposite[i]] = static_cast<Color>(c);
  }
  auto color_of = [&](EdgeId e) { return static_cast<int>(t.coloring[e]); };

  std::array<std::vector<Trail>, 3> out;
  for (int c = 0; c < 3; ++c) {
    const NormalPartition& p = t.partitions[c];
    for (const Trail& tr : p.trails()) {
      Trail nt;
      for (std::size_t k = 0; k < tr.vertices.size(); ++k) {
        if (k > 0) nt.edges.push_back(tr.edges[k - 1]);
        const VertexId x = tr.vertices[k];
        if (x != v) {
          nt.vertices.push_back(x);
        } else if (k == 0) {
          nt.vertices.push_back(attach[color_of(tr.edges[0])]);
        } else if (k + 1 == tr.vertices.size()) {
          nt.vertices.push_back(attach[color_of(tr.edges[k - 1])]);
        } else {
          const int a = color_of(tr.edges[k - 1]), b = color_of(tr.edges[k]), mid = 3 - a - b;
          nt.vertices.push_back(attach[a]);
          nt.edges.push_back(tri[b]);
          nt.vertices.push_back(attach[mid]);
          nt.edges.push_back(tri[a]);
          nt.vertices.push_back(attach[b]);
        }
      }
      out[c].push_back(std::move(nt));
    }
    const auto passage = p.internal_passage(g, v);
    const int a = color_of(passage[0].edge), b = color_of(passage[1].edge);
    out[c].push_back(single(attach[a], tri[3 - a - b], attach[b]));
  }
  return finish(std::move(h), std::move(out), std::move(coloring));
}

}  // namespace copnc
