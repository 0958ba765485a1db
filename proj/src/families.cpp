#include "copnc/families.hpp"

#include <algorithm>
#include <sstream>

#include "copnc/search.hpp"

namespace copnc {

namespace {

constexpr int kMaxChainCheck = 15;
constexpr const char* kLetters = "uvwt";

VertexId marked_neighbor(const CubicGraph& g, const NormalPartition& p, VertexId v) {
  return g.other_end(p.marked_edge(v), v);
}

Slot slot_towards(const CubicGraph& g, VertexId v, VertexId y) {
  for (Slot s : g.slots(v)) {
    if (g.other_end(s.edge, v) == y) return s;
  }
  throw Error(ErrorKind::kInvariantViolation, "frozen mark names a non-neighbour");
}

bool edge_is_odd(const NormalPartition& p, EdgeId e) {
  for (const Trail& t : p.trails()) {
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end()) continue;
    const auto odd = odd_edges(t);
    return std::find(odd.begin(), odd.end(), e) != odd.end();
  }
  return false;
}

void require_valid(const CubicGraph& g, const Triple& t, const char* what) {
  for (const auto& p : t) {
    if (!is_odd(p)) throw Error(ErrorKind::kInvariantViolation, std::string(what) + ": partition not odd");
  }
  if (!is_compatible_triple(t)) {
    throw Error(ErrorKind::kInvariantViolation, std::string(what) + ": triple not compatible");
  }
  (void)g;
}

std::optional<Triple> try_triple(const CubicGraph& g, const NeighborMarks& marks) {
  try {
    Triple t = triple_from_neighbor_marks(g, marks);
    for (const auto& p : t) {
      if (!is_odd(p)) return std::nullopt;
    }
    if (!is_compatible_triple(t)) return std::nullopt;
    return t;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Fixes every vertex that has a mark in `fixed` (kNone marks are free).
constexpr VertexId kNone = static_cast<VertexId>(-1);

TripleOptions pinned(const CubicGraph& g, const NeighborMarks& fixed) {
  TripleOptions options;
  options.allow = [&g, fixed](VertexId v, const std::array<Slot, 3>& s) {
    for (int c = 0; c < 3; ++c) {
      if (fixed[c][v] != kNone && !(s[c] == slot_towards(g, v, fixed[c][v]))) return false;
    }
    return true;
  };
  return options;
}

// --- Flower ------------------------------------------------------------------

struct FlowerCodec {
  int k;
  VertexId id(FlowerName n) const {
    const auto letter = static_cast<int>(std::string_view(kLetters).find(n.letter));
    return static_cast<VertexId>(letter * k + n.index - 1);
  }
  FlowerName name(VertexId v) const {
    return {kLetters[v / k], static_cast<int>(v % k) + 1};
  }
};

// Marks at u_1..t_2 every triple on a Flower snark must carry.
struct BoundaryMark {
  int partition;
  FlowerName at, to;
};

std::vector<BoundaryMark> boundary_marks(int k) {
  return {
      {0, {'u', 1}, {'v', 1}}, {0, {'v', 1}, {'w', 1}}, {0, {'w', 1}, {'w', 2}}, {0, {'t', 1}, {'t', 2}},
      {1, {'u', 1}, {'u', k}}, {1, {'v', 1}, {'t', 1}}, {1, {'w', 1}, {'v', 1}}, {1, {'t', 1}, {'w', k}},
      {2, {'u', 1}, {'u', 2}}, {2, {'v', 1}, {'u', 1}}, {2, {'w', 1}, {'t', k}}, {2, {'t', 1}, {'v', 1}},
      {0, {'u', 2}, {'u', 3}}, {0, {'v', 2}, {'u', 2}}, {0, {'w', 2}, {'v', 2}}, {0, {'t', 2}, {'t', 1}},
      {1, {'u', 2}, {'v', 2}}, {1, {'v', 2}, {'t', 2}}, {1, {'w', 2}, {'w', 3}}, {1, {'t', 2}, {'t', 3}},
      {2, {'u', 2}, {'u', 1}}, {2, {'v', 2}, {'w', 2}}, {2, {'w', 2}, {'w', 1}}, {2, {'t', 2}, {'v', 2}},
  };
}

std::string show(FlowerName n) { return std::string(1, n.letter) + std::to_string(n.index); }

NeighborMarks unset_marks(std::size_t n) {
  NeighborMarks m;
  for (auto& v : m) v.assign(n, kNone);
  return m;
}

// F_k -> F_{k+2}: two vertices of each letter are inserted after index 1.
// Old marks keep pointing at the same neighbour, the new index-2 vertices
// take their boundary marks, and index 3 is left to `gadget` (kNone if null).
NeighborMarks flower_step(const NeighborMarks& old, int k,
                          const std::array<std::array<FlowerName, 4>, 3>* gadget) {
  const FlowerCodec from{k}, to{k + 2};
  auto rename = [](FlowerName n) { return FlowerName{n.letter, n.index == 1 ? 1 : n.index + 2}; };
  NeighborMarks out = unset_marks(static_cast<std::size_t>(4 * (k + 2)));
  for (int c = 0; c < 3; ++c) {
    for (VertexId x = 0; x < old[c].size(); ++x) {
      const FlowerName nx = from.name(x), ny = from.name(old[c][x]);
      FlowerName target = rename(ny);
      const bool cut = nx.letter == ny.letter && nx.letter != 'v' &&
                       std::min(nx.index, ny.index) == 1 && std::max(nx.index, ny.index) == 2;
      if (cut) target = {nx.letter, nx.index == 1 ? 2 : 3};
      out[c][to.id(rename(nx))] = to.id(target);
    }
  }
  for (const BoundaryMark& b : boundary_marks(k + 2)) {
    if (b.at.index == 2) out[b.partition][to.id(b.at)] = to.id(b.to);
  }
  if (gadget) {
    for (int c = 0; c < 3; ++c) {
      for (int l = 0; l < 4; ++l) out[c][to.id({kLetters[l], 3})] = to.id((*gadget)[c][l]);
    }
  }
  return out;
}

bool flower_chain_ok(NeighborMarks marks, int k, const std::array<std::array<FlowerName, 4>, 3>& gadget) {
  for (; k + 2 <= kMaxChainCheck; k += 2) {
    marks = flower_step(marks, k, &gadget);
    auto t = try_triple(flower(k + 2), marks);
    if (!t || !flower_boundary_violations(k + 2, *t).empty()) return false;
  }
  return true;
}

TripleOptions flower_options(const CubicGraph& g, int k, const NeighborMarks& fixed) {
  TripleOptions options = pinned(g, fixed);
  options.accept = [k](const Triple& t) { return flower_boundary_violations(k, t).empty(); };
  return options;
}

void derive_flower(FamilyData& data) {
  const CubicGraph f3 = flower(3);
  const FlowerCodec c3{3}, c5{5};
  NeighborMarks fixed = unset_marks(f3.vertex_count());
  for (const BoundaryMark& b : boundary_marks(3)) fixed[b.partition][c3.id(b.at)] = c3.id(b.to);
  bool done = false;
  for_each_compatible_triple(f3, flower_options(f3, 3, fixed), [&](const Triple& base) {
    const NeighborMarks base_marks = neighbor_marks(f3, base);
    const CubicGraph f5 = flower(5);
    const NeighborMarks partial = flower_step(base_marks, 3, nullptr);
    for_each_compatible_triple(f5, flower_options(f5, 5, partial), [&](const Triple& next) {
      const NeighborMarks m = neighbor_marks(f5, next);
      std::array<std::array<FlowerName, 4>, 3> gadget{};
      for (int c = 0; c < 3; ++c) {
        for (int l = 0; l < 4; ++l) gadget[c][l] = c5.name(m[c][c5.id({kLetters[l], 3})]);
      }
      if (!flower_chain_ok(base_marks, 3, gadget)) return true;
      data.flower3 = base_marks;
      data.flower_gadget = gadget;
      done = true;
      return false;
    });
    return !done;
  });
  if (!done) throw Error(ErrorKind::kSearchExhausted, "SearchExhausted: no Flower insertion gadget");
}

// --- Goldberg ----------------------------------------------------------------

GoldbergRef relative(VertexId x, VertexId y, int k) {
  const int jx = static_cast<int>(x / 8), jy = static_cast<int>(y / 8);
  int d = ((jy - jx) % k + k) % k;
  if (d == k - 1) d = -1;
  return {static_cast<int>(y % 8) + 1, d};
}

VertexId absolute(int block, GoldbergRef r, int k) {
  return goldberg_vertex(r.i, ((block + r.offset) % k + k) % k);
}

// G_k -> G_{k+2}: blocks 1 and 2 are inserted after block 0. Every old mark
// keeps its relative neighbour; the inserted blocks come from `gadget`.
NeighborMarks goldberg_step(const NeighborMarks& old, int k,
                            const std::array<std::array<GoldbergRef, 16>, 3>* gadget) {
  const int big = k + 2;
  NeighborMarks out = unset_marks(static_cast<std::size_t>(8 * big));
  for (int c = 0; c < 3; ++c) {
    for (VertexId x = 0; x < old[c].size(); ++x) {
      const int j = static_cast<int>(x / 8), i = static_cast<int>(x % 8) + 1;
      const int nj = j == 0 ? 0 : j + 2;
      out[c][goldberg_vertex(i, nj)] = absolute(nj, relative(x, old[c][x], k), big);
    }
    if (!gadget) continue;
    for (int s = 0; s < 16; ++s) {
      const int block = 1 + s / 8, i = s % 8 + 1;
      out[c][goldberg_vertex(i, block)] = absolute(block, (*gadget)[c][s], big);
    }
  }
  return out;
}

bool goldberg_chain_ok(NeighborMarks marks, int k, const std::array<std::array<GoldbergRef, 16>, 3>& gadget) {
  for (; k + 2 <= kMaxChainCheck; k += 2) {
    marks = goldberg_step(marks, k, &gadget);
    if (!try_triple(goldberg(k + 2), marks)) return false;
  }
  return true;
}

void derive_goldberg(FamilyData& data) {
  const CubicGraph g3 = goldberg(3), g5 = goldberg(5);
  bool done = false;
  for_each_compatible_triple(g3, {}, [&](const Triple& base) {
    const NeighborMarks base_marks = neighbor_marks(g3, base);
    const NeighborMarks partial = goldberg_step(base_marks, 3, nullptr);
    for_each_compatible_triple(g5, pinned(g5, partial), [&](const Triple& next) {
      const NeighborMarks m = neighbor_marks(g5, next);
      std::array<std::array<GoldbergRef, 16>, 3> gadget{};
      for (int c = 0; c < 3; ++c) {
        for (int s = 0; s < 16; ++s) {
          const VertexId x = goldberg_vertex(s % 8 + 1, 1 + s / 8);
          gadget[c][s] = relative(x, m[c][x], 5);
        }
      }
      if (!goldberg_chain_ok(base_marks, 3, gadget)) return true;
      data.goldberg3 = base_marks;
      data.goldberg_gadget = gadget;
      done = true;
      return false;
    });
    return !done;
  });
  if (!done) throw Error(ErrorKind::kSearchExhausted, "SearchExhausted: no Goldberg insertion gadget");
}

// --- Petersen ----------------------------------------------------------------

bool petersen_profile(const NormalPartition& p) {
  std::vector<std::size_t> lengths;
  for (const Trail& t : p.trails()) lengths.push_back(t.length());
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths == std::vector<std::size_t>{5, 3, 3, 3, 1};
}

void derive_petersen(FamilyData& data) {
  const CubicGraph g = generate("petersen");
  const auto autos = automorphisms(g);
  TripleOptions options;
  options.max_length = 5;
  options.accept = [&](const Triple& t) {
    return std::all_of(t.begin(), t.end(), petersen_profile) && isomorphic_partitions(g, t[0], t[1], autos) &&
           isomorphic_partitions(g, t[0], t[2], autos);
  };
  auto t = find_compatible_triple(g, options);
  if (!t) throw Error(ErrorKind::kSearchExhausted, "SearchExhausted: no symmetric Petersen triple");
  data.petersen = neighbor_marks(g, *t);
}

void check_k(int k) {
  if (k < 3 || k % 2 == 0) throw Error(ErrorKind::kBadParameter, "k must be odd and at least 3");
}

}  // namespace

NeighborMarks neighbor_marks(const CubicGraph& g, const Triple& t) {
  NeighborMarks out;
  for (int c = 0; c < 3; ++c) {
    out[c].resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[c][v] = marked_neighbor(g, t[c], v);
  }
  return out;
}

Triple triple_from_neighbor_marks(const CubicGraph& g, const NeighborMarks& marks) {
  for (const auto& m : marks) {
    if (m.size() != g.vertex_count() || std::count(m.begin(), m.end(), kNone) != 0) {
      throw Error(ErrorKind::kBadParameter, "incomplete marks");
    }
  }
  return {trails_from_marking(g, marking_from_neighbors(g, marks[0])),
          trails_from_marking(g, marking_from_neighbors(g, marks[1])),
          trails_from_marking(g, marking_from_neighbors(g, marks[2]))};
}

std::vector<std::string> flower_boundary_violations(int k, const Triple& t) {
  check_k(k);
  const CubicGraph g = flower(k);
  const FlowerCodec codec{k};
  std::vector<std::string> out;
  for (const BoundaryMark& b : boundary_marks(k)) {
    const VertexId got = marked_neighbor(g, t[b.partition], codec.id(b.at));
    if (got != codec.id(b.to)) {
      out.push_back("T" + std::to_string(b.partition + 1) + " marks " + show(b.at) + show(codec.name(got)) +
                    ", expected " + show(b.at) + show(b.to));
    }
  }
  const EdgeId uu = *g.edge_between(codec.id({'u', 1}), codec.id({'u', 2}));
  const EdgeId tt = *g.edge_between(codec.id({'t', 1}), codec.id({'t', 2}));
  if (!edge_is_odd(t[0], uu)) out.push_back("u1u2 is not odd in T1");
  if (!edge_is_odd(t[1], tt)) out.push_back("t1t2 is not odd in T2");
  if (!edge_is_odd(t[2], tt)) out.push_back("t1t2 is not odd in T3");
  return out;
}

std::vector<std::vector<VertexId>> automorphisms(const CubicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    adj[a][b] = adj[b][a] = true;
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> image(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (VertexId x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[image[u]][x];
      if (!ok) continue;
      used[x] = true;
      image[v] = x;
      self(self, v + 1);
      used[x] = false;
    }
  };
  extend(extend, 0);
  return out;
}

bool isomorphic_partitions(const CubicGraph& g, const NormalPartition& a, const NormalPartition& b,
                           const std::vector<std::vector<VertexId>>& autos) {
  for (const auto& s : autos) {
    bool ok = true;
    for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
      ok = marked_neighbor(g, b, s[v]) == s[marked_neighbor(g, a, v)];
    }
    if (ok) return true;
  }
  return false;
}

FamilyData derive_family_data() {
  FamilyData data;
  derive_petersen(data);
  derive_flower(data);
  derive_goldberg(data);
  return data;
}

std::string family_data_source(const FamilyData& d) {
  std::ostringstream os;
  auto marks = [&](const char* name, const NeighborMarks& m) {
    os << "  d." << name << " = {{\n";
    for (const auto& row : m) {
      os << "      {";
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i];
      os << "},\n";
    }
    os << "  }};\n";
  };
  marks("petersen", d.petersen);
  marks("flower3", d.flower3);
  os << "  d.flower_gadget = {{\n";
  for (const auto& row : d.flower_gadget) {
    os << "      {{";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << "{'" << row[i].letter << "', " << row[i].index << "}";
    os << "}},\n";
  }
  os << "  }};\n";
  marks("goldberg3", d.goldberg3);
  os << "  d.goldberg_gadget = {{\n";
  for (const auto& row : d.goldberg_gadget) {
    os << "      {{";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << "{" << row[i].i << ", " << row[i].offset << "}";
    os << "}},\n";
  }
  os << "  }};\n";
  return os.str();
}

Triple petersen_triple() {
  const CubicGraph g = generate("petersen");
  Triple t = triple_from_neighbor_marks(g, frozen_family_data().petersen);
  require_valid(g, t, "petersen");
  return t;
}

Triple flower_triple(int k) { return flower_triple(k, frozen_family_data()); }
Triple goldberg_triple(int k) { return goldberg_triple(k, frozen_family_data()); }

Triple flower_triple(int k, const FamilyData& data) {
  check_k(k);
  NeighborMarks marks = data.flower3;
  for (int j = 3; j < k; j += 2) marks = flower_step(marks, j, &data.flower_gadget);
  const CubicGraph g = flower(k);
  Triple t = triple_from_neighbor_marks(g, marks);
  require_valid(g, t, "flower");
  return t;
}

Triple goldberg_triple(int k, const FamilyData& data) {
  check_k(k);
  NeighborMarks marks = data.goldberg3;
  for (int j = 3; j < k; j += 2) marks = goldberg_step(marks, j, &data.goldberg_gadget);
  const CubicGraph g = goldberg(k);
  Triple t = triple_from_neighbor_marks(g, marks);
  require_valid(g, t, "goldberg");
  return t;
}

}  // namespace copnc
