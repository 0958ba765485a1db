#include "copnc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace copnc {

class PartitionFactory {
 public:
  static NormalPartition make(std::vector<Trail> trails, Marking marking) {
    return NormalPartition(std::move(trails), std::move(marking));
  }
};

Trail Trail::reversed() const {
  Trail out{vertices, edges};
  std::reverse(out.vertices.begin(), out.vertices.end());
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

std::array<Slot, 2> NormalPartition::internal_passage(const CubicGraph& g, VertexId v) const {
  std::array<Slot, 2> out{};
  int i = 0;
  for (Slot s : g.slots(v)) {
    if (s != marking_[v]) out[i++] = s;
  }
  return out;
}

std::size_t NormalPartition::max_length() const {
  std::size_t best = 0;
  for (const Trail& t : trails_) best = std::max(best, t.length());
  return best;
}

namespace {

std::vector<std::uint32_t> trail_key(const Trail& t) {
  std::vector<std::uint32_t> key;
  key.reserve(2 * t.length() + 2);
  key.push_back(static_cast<std::uint32_t>(t.length()));
  for (std::size_t i = 0; i < t.length(); ++i) {
    key.push_back(t.vertices[i]);
    key.push_back(t.edges[i]);
  }
  key.push_back(t.vertices.back());
  return key;
}

}  // namespace

std::vector<std::uint32_t> NormalPartition::canonical_form() const {
  std::vector<std::vector<std::uint32_t>> keys;
  keys.reserve(trails_.size());
  for (const Trail& t : trails_) keys.push_back(std::min(trail_key(t), trail_key(t.reversed())));
  std::sort(keys.begin(), keys.end());
  std::vector<std::uint32_t> out;
  for (const auto& k : keys) out.insert(out.end(), k.begin(), k.end());
  return out;
}

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::kBadTrail: return "BadTrail";
    case Violation::kEdgeUncovered: return "NotAPartition(uncovered)";
    case Violation::kEdgeDoubleCovered: return "NotAPartition(double-covered)";
    case Violation::kVertexNeverInternal: return "VertexNeverInternal";
    case Violation::kVertexEndCount: return "VertexEndCount";
  }
  return "?";
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  out << "not a normal partition:";
  for (const auto& d : diagnostics) out << ' ' << d.message << ';';
  return out.str();
}

std::string format_cycle(const std::vector<EdgeId>& cycle) {
  std::ostringstream out;
  out << "CycleError(";
  for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
  out << ')';
  return out.str();
}

}  // namespace

PartitionError::PartitionError(std::vector<Diagnostic> diagnostics)
    : Error(ErrorKind::kNotAPartition, join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

CycleError::CycleError(std::vector<EdgeId> cycle)
    : Error(ErrorKind::kCycle, format_cycle(cycle)), cycle_(std::move(cycle)) {}

namespace {

Slot end_slot(const CubicGraph& g, EdgeId e, VertexId v) { return g.slot_at(e, v); }

bool trail_is_well_formed(const CubicGraph& g, const Trail& t, std::string& why) {
  if (t.edges.empty()) {
    why = "trail has no edges";
    return false;
  }
  if (t.vertices.size() != t.edges.size() + 1) {
    why = "vertex/edge counts disagree";
    return false;
  }
  for (VertexId v : t.vertices) {
    if (v >= g.vertex_count()) {
      why = "vertex " + std::to_string(v) + " out of range";
      return false;
    }
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    EdgeId e = t.edges[i];
    if (e >= g.edge_count()) {
      why = "edge " + std::to_string(e) + " out of range";
      return false;
    }
    auto [a, b] = g.endpoints(e);
    VertexId x = t.vertices[i], y = t.vertices[i + 1];
    if (!((a == x && b == y) || (a == y && b == x))) {
      why = "edge " + std::to_string(e) + " does not join " + std::to_string(x) + " and " +
            std::to_string(y);
      return false;
    }
  }
  std::vector<EdgeId> sorted = t.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    why = "repeated edge";
    return false;
  }
  return true;
}

}  // namespace

Validation validate_normal(const CubicGraph& g, std::vector<Trail> trails) {
  Validation result;
  auto& diags = result.diagnostics;
  bool syntax_ok = true;
  for (std::size_t i = 0; i < trails.size(); ++i) {
    std::string why;
    if (!trail_is_well_formed(g, trails[i], why)) {
      diags.push_back({Violation::kBadTrail, static_cast<std::uint32_t>(i), 0,
                       "BadTrail(" + std::to_string(i) + ": " + why + ")"});
      syntax_ok = false;
    }
  }
  if (!syntax_ok) return result;

  std::vector<std::size_t> cover(g.edge_count(), 0);
  std::vector<std::size_t> internal(g.vertex_count(), 0), ends(g.vertex_count(), 0);
  for (const Trail& t : trails) {
    for (EdgeId e : t.edges) ++cover[e];
    ++ends[t.front()];
    ++ends[t.back()];
    for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) ++internal[t.vertices[i]];
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (cover[e] == 0) {
      diags.push_back({Violation::kEdgeUncovered, e, 0,
                       "NotAPartition(edge " + std::to_string(e) + " uncovered)"});
    } else if (cover[e] > 1) {
      diags.push_back({Violation::kEdgeDoubleCovered, e, cover[e],
                       "NotAPartition(edge " + std::to_string(e) + " covered " +
                           std::to_string(cover[e]) + " times)"});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (internal[v] == 0) {
      diags.push_back({Violation::kVertexNeverInternal, v, 0,
                       "VertexNeverInternal(" + std::to_string(v) + ")"});
    }
    if (ends[v] != 1) {
      diags.push_back({Violation::kVertexEndCount, v, ends[v],
                       "VertexEndCount(" + std::to_string(v) + ", " + std::to_string(ends[v]) + ")"});
    }
  }
  if (!diags.empty()) return result;

  // Slot counting (two slots per internal visit, one per end) forces one
  // internal visit and one end per vertex, so no trail closes on itself.
  Marking marking(g.vertex_count());
  for (const Trail& t : trails) {
    marking[t.front()] = end_slot(g, t.edges.front(), t.front());
    marking[t.back()] = end_slot(g, t.edges.back(), t.back());
  }
  result.partition = PartitionFactory::make(std::move(trails), std::move(marking));
  return result;
}

NormalPartition make_partition(const CubicGraph& g, std::vector<Trail> trails) {
  Validation v = validate_normal(g, std::move(trails));
  if (!v.ok()) throw PartitionError(std::move(v.diagnostics));
  return std::move(*v.partition);
}

Marking normalize_marking(const CubicGraph& g, Marking marking) {
  for (Slot& s : marking) {
    if (s.edge < g.edge_count() && g.is_loop(s.edge)) s.end = 0;
  }
  return marking;
}

NormalPartition trails_from_marking(const CubicGraph& g, const Marking& raw) {
  const std::size_t n = g.vertex_count();
  if (raw.size() != n) throw Error(ErrorKind::kBadParameter, "marking size differs from vertex count");
  Marking marking = normalize_marking(g, raw);
  for (VertexId v = 0; v < n; ++v) {
    const Slot s = marking[v];
    if (s.edge >= g.edge_count() || g.vertex_of(s) != v) {
      throw Error(ErrorKind::kBadParameter, "marked slot is not incident to vertex " + std::to_string(v));
    }
  }
  auto is_marked = [&](Slot s) { return marking[g.vertex_of(s)] == s; };
  auto partner = [&](Slot s) {
    const VertexId v = g.vertex_of(s);
    for (Slot t : g.slots(v)) {
      if (t != s && t != marking[v]) return t;
    }
    return s;  // unreachable for valid input
  };

  std::vector<bool> used(g.edge_count(), false);
  std::vector<bool> started(n, false);
  std::vector<Trail> trails;
  for (VertexId v = 0; v < n; ++v) {
    if (started[v]) continue;
    Trail t;
    t.vertices.push_back(v);
    Slot at = marking[v];
    started[v] = true;
    while (true) {
      if (used[at.edge]) throw CycleError({at.edge});
      used[at.edge] = true;
      t.edges.push_back(at.edge);
      Slot arrive = g.opposite(at);
      const VertexId w = g.vertex_of(arrive);
      t.vertices.push_back(w);
      if (is_marked(arrive)) {
        started[w] = true;
        break;
      }
      at = partner(arrive);
    }
    trails.push_back(std::move(t));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (used[e]) continue;
    std::vector<EdgeId> cycle;
    Slot at = g.slot_at(e, g.endpoints(e).first);
    do {
      cycle.push_back(at.edge);
      used[at.edge] = true;
      at = partner(g.opposite(at));
    } while (!used[at.edge]);
    throw CycleError(std::move(cycle));
  }
  return PartitionFactory::make(std::move(trails), std::move(marking));
}

Marking marking_from_neighbors(const CubicGraph& g, const std::vector<VertexId>& neighbor) {
  Marking out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto e = g.edge_between(v, neighbor[v]);
    if (!e) {
      throw Error(ErrorKind::kBadParameter,
                  std::to_string(v) + " is not adjacent to " + std::to_string(neighbor[v]));
    }
    out[v] = g.slot_at(*e, v);
  }
  return out;
}

std::vector<EdgeId> odd_edges(const Trail& t) {
  std::vector<EdgeId> out;
  for (std::size_t i = 1; i < t.edges.size(); i += 2) out.push_back(t.edges[i]);
  return out;
}

bool is_odd(const NormalPartition& p) {
  return std::all_of(p.trails().begin(), p.trails().end(),
                     [](const Trail& t) { return t.length() % 2 == 1; });
}

PerfectMatching associated_matching(const NormalPartition& p) {
  if (!is_odd(p)) throw Error(ErrorKind::kNotOdd, "partition has an even trail");
  PerfectMatching m;
  for (const Trail& t : p.trails()) {
    auto odd = odd_edges(t);
    m.insert(m.end(), odd.begin(), odd.end());
  }
  std::sort(m.begin(), m.end());
  return m;
}

bool is_conformal(const NormalPartition& p, const PerfectMatching& m) {
  if (!is_odd(p)) return false;
  PerfectMatching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  return associated_matching(p) == sorted;
}

std::vector<VertexId> compatibility_set(const NormalPartition& a, const NormalPartition& b) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < a.marking().size(); ++v) {
    if (a.marked(v) == b.marked(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> triple_set(const NormalPartition& a, const NormalPartition& b,
                                 const NormalPartition& c) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < a.marking().size(); ++v) {
    if (a.marked(v) == b.marked(v) || b.marked(v) == c.marked(v) || a.marked(v) == c.marked(v)) {
      out.push_back(v);
    }
  }
  return out;
}

PartitionStats stats(const NormalPartition& p) {
  PartitionStats s;
  std::uint64_t total = 0;
  for (const Trail& t : p.trails()) {
    ++s.n_of[t.length()];
    total += t.length();
    s.max_length = std::max(s.max_length, t.length());
  }
  const std::uint64_t count = p.trails().size();
  const std::uint64_t d = std::gcd(total, count);
  s.mu_numerator = d ? total / d : 0;
  s.mu_denominator = d ? count / d : 1;
  for (auto [len, cnt] : s.n_of) s.balance += (3 - static_cast<long long>(len)) * static_cast<long long>(cnt);
  return s;
}

namespace {

// 0: edge absent from interior; 1: internal edge; 2: the whole trail.
std::vector<std::uint8_t> edge_roles(const CubicGraph& g, const NormalPartition& p) {
  std::vector<std::uint8_t> role(g.edge_count(), 0);
  for (const Trail& t : p.trails()) {
    if (t.length() == 1) role[t.edges[0]] = 2;
    for (std::size_t i = 1; i + 1 < t.edges.size(); ++i) role[t.edges[i]] = 1;
  }
  return role;
}

}  // namespace

EdgeRoleAudit edge_role_audit(const CubicGraph& g, const Triple& t) {
  std::vector<bool> in_a(g.vertex_count(), false);
  for (VertexId v : triple_set(t[0], t[1], t[2])) in_a[v] = true;
  std::array<std::vector<std::uint8_t>, 3> roles = {edge_roles(g, t[0]), edge_roles(g, t[1]),
                                                    edge_roles(g, t[2])};
  EdgeRoleAudit audit;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.endpoints(e);
    if (in_a[x] || in_a[y]) continue;
    ++audit.checked;
    int internal = 0;
    for (const auto& r : roles) internal += r[e] == 1 ? 1 : 0;
    bool ok = internal == 1;
    if (internal == 2) {
      ok = false;
      for (const auto& r : roles) {
        if (r[e] != 1) ok = r[e] == 2;
      }
    }
    if (!ok) {
      throw Error(ErrorKind::kInvariantViolation,
                  "AuditViolation(edge " + std::to_string(e) + ", internal in " +
                      std::to_string(internal) + " partitions)");
    }
    (internal == 1 ? audit.internal_in_one : audit.internal_in_two)++;
  }
  return audit;
}

VertexRoles vertex_roles(const NormalPartition& p) {
  const std::size_t n = p.marking().size();
  VertexRoles r;
  r.internal_trail.assign(n, 0);
  r.internal_pos.assign(n, 0);
  r.end_trail.assign(n, 0);
  r.end_is_back.assign(n, false);
  for (std::size_t i = 0; i < p.trails().size(); ++i) {
    const Trail& t = p.trails()[i];
    r.end_trail[t.front()] = i;
    r.end_is_back[t.front()] = false;
    r.end_trail[t.back()] = i;
    r.end_is_back[t.back()] = true;
    for (std::size_t k = 1; k + 1 < t.vertices.size(); ++k) {
      r.internal_trail[t.vertices[k]] = i;
      r.internal_pos[t.vertices[k]] = k;
    }
  }
  return r;
}

NormalPartition relabel(const NormalPartition& p, const CubicGraph& target,
                        const std::vector<VertexId>& vertex_map,
                        const std::vector<EdgeId>& edge_map) {
  std::vector<Trail> trails;
  trails.reserve(p.size());
  for (const Trail& t : p.trails()) {
    Trail out;
    for (VertexId v : t.vertices) out.vertices.push_back(vertex_map[v]);
    for (EdgeId e : t.edges) out.edges.push_back(edge_map[e]);
    trails.push_back(std::move(out));
  }
  return make_partition(target, std::move(trails));
}

}  // namespace copnc
