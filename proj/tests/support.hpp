#pragma once

// Shared test helpers: corpus access and brute-force oracles that do not go
// through the library's own checks.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "copnc/partition.hpp"
#include "copnc/search.hpp"

namespace testing_support {

using namespace copnc;

inline std::string corpus_path(const std::string& name) { return std::string(COPNC_CORPUS_DIR) + "/" + name; }

struct CorpusGraph {
  std::string id;
  CubicGraph graph;
};

inline std::vector<CorpusGraph> corpus(const std::string& name) {
  std::vector<CorpusGraph> out;
  for (const SweepInput& in : read_corpus(corpus_path(name))) {
    out.push_back({in.id, in.graph6 ? parse_graph6(in.text) : parse_edge_list(in.text)});
  }
  return out;
}

/// Every connected cubic multigraph (loops allowed) on n <= 10 vertices.
inline std::vector<CorpusGraph> multigraphs_up_to(std::size_t n) {
  std::vector<CorpusGraph> out;
  for (const char* f : {"cubic_n02.txt", "cubic_n04.txt", "cubic_n06.txt", "cubic_n08.txt", "cubic_n10.txt"}) {
    for (auto& g : corpus(f)) {
      if (g.graph.vertex_count() <= n) out.push_back(std::move(g));
    }
  }
  return out;
}

inline std::vector<CorpusGraph> simple_graphs(std::initializer_list<int> ns) {
  std::vector<CorpusGraph> out;
  for (int n : ns) {
    const std::string f = std::string("simple_n") + (n < 10 ? "0" : "") + std::to_string(n) + ".g6";
    for (auto& g : corpus(f)) out.push_back(std::move(g));
  }
  return out;
}

// --- oracles ----------------------------------------------------------------

/// Normality straight from the definition: each edge used once, each vertex
/// internal exactly once and an end exactly once, consecutive edges joined.
inline bool oracle_is_normal(const CubicGraph& g, const std::vector<Trail>& trails) {
  std::vector<int> used(g.edge_count(), 0), internal(g.vertex_count(), 0), ends(g.vertex_count(), 0);
  for (const Trail& t : trails) {
    if (t.edges.empty() || t.vertices.size() != t.edges.size() + 1) return false;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      if (t.edges[i] >= g.edge_count()) return false;
      const auto [a, b] = g.endpoints(t.edges[i]);
      const VertexId x = t.vertices[i], y = t.vertices[i + 1];
      if (!((a == x && b == y) || (a == y && b == x))) return false;
      ++used[t.edges[i]];
    }
    ++ends[t.vertices.front()];
    ++ends[t.vertices.back()];
    for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) ++internal[t.vertices[i]];
  }
  for (int u : used) {
    if (u != 1) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (internal[v] != 1 || ends[v] != 1) return false;
  }
  return true;
}

inline bool oracle_is_odd(const NormalPartition& p) {
  return std::all_of(p.trails().begin(), p.trails().end(), [](const Trail& t) { return t.edges.size() % 2 == 1; });
}

/// Edges in 2nd, 4th, ... position of every trail.
inline std::set<EdgeId> oracle_matching(const NormalPartition& p) {
  std::set<EdgeId> out;
  for (const Trail& t : p.trails()) {
    for (std::size_t i = 1; i < t.edges.size(); i += 2) out.insert(t.edges[i]);
  }
  return out;
}

inline long long oracle_balance(const NormalPartition& p) {
  long long s = 0;
  for (const Trail& t : p.trails()) s += 3 - static_cast<long long>(t.edges.size());
  return s;
}

/// Edge at each vertex that ends a trail there.
inline std::vector<EdgeId> oracle_end_edges(const CubicGraph& g, const NormalPartition& p) {
  std::vector<EdgeId> out(g.vertex_count());
  for (const Trail& t : p.trails()) {
    out[t.vertices.front()] = t.edges.front();
    out[t.vertices.back()] = t.edges.back();
  }
  return out;
}

inline bool oracle_compatible(const CubicGraph& g, const NormalPartition& a, const NormalPartition& b) {
  const auto ea = oracle_end_edges(g, a), eb = oracle_end_edges(g, b);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (ea[v] == eb[v]) return false;
  }
  return true;
}

/// Follows marked slots by hand: the two unmarked slots of a vertex pass a
/// trail through. nullopt when some edges close up into a circuit. Loopless
/// graphs only.
inline std::optional<std::vector<Trail>> oracle_trails(const CubicGraph& g, const std::vector<Slot>& marked) {
  std::vector<Trail> out;
  std::size_t covered = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Slot s = marked[v];
    Trail t{{v}, {}};
    VertexId at = v;
    while (true) {
      t.edges.push_back(s.edge);
      const Slot in = g.opposite(s);
      at = g.vertex_of(in);
      t.vertices.push_back(at);
      if (marked[at] == in) break;
      if (t.edges.size() > g.edge_count()) return std::nullopt;
      for (Slot x : g.slots(at)) {
        if (!(x == in) && !(x == marked[at])) s = x;
      }
    }
    // Each trail is met from both ends; keep the copy starting at the smaller slot.
    if (marked[v] < marked[at]) {
      covered += t.edges.size();
      out.push_back(std::move(t));
    }
  }
  if (covered != g.edge_count()) return std::nullopt;
  return out;
}

/// Tally of everything the audits have seen. Thread safe.
struct AuditLog {
  std::mutex mu;
  std::size_t triples = 0;
  std::size_t partitions = 0;
  std::size_t matching_violations = 0;  // an edge common to all three associated matchings
  std::size_t balance_violations = 0;
  std::size_t role_violations = 0;
  std::size_t other_violations = 0;
  std::vector<std::string> messages;

  std::size_t violations() const {
    return matching_violations + balance_violations + role_violations + other_violations;
  }
};

inline AuditLog& audit_log() {
  static AuditLog log;
  return log;
}

inline bool audit_partition(const CubicGraph& g, const NormalPartition& p, const std::string& where) {
  AuditLog& log = audit_log();
  const bool normal = oracle_is_normal(g, p.trails());
  const bool balanced = !oracle_is_odd(p) || oracle_balance(p) == 0;
  std::lock_guard lock(log.mu);
  ++log.partitions;
  if (!normal) {
    ++log.other_violations;
    log.messages.push_back(where + ": not a normal partition");
  }
  if (!balanced) {
    ++log.balance_violations;
    log.messages.push_back(where + ": length balance is not zero");
  }
  return normal && balanced;
}

/// Full audit of a triple that is supposed to be compatible and odd.
inline bool audit_triple(const CubicGraph& g, const Triple& t, const std::string& where) {
  bool ok = true;
  for (const auto& p : t) ok = audit_partition(g, p, where) && ok;
  const bool odd = std::all_of(t.begin(), t.end(), oracle_is_odd);
  const bool compatible =
      oracle_compatible(g, t[0], t[1]) && oracle_compatible(g, t[0], t[2]) && oracle_compatible(g, t[1], t[2]);
  bool empty_intersection = true;
  if (odd) {
    const auto m0 = oracle_matching(t[0]), m1 = oracle_matching(t[1]), m2 = oracle_matching(t[2]);
    for (EdgeId e : m0) empty_intersection = empty_intersection && !(m1.count(e) && m2.count(e));
  }
  bool roles = true;
  try {
    edge_role_audit(g, t);
  } catch (const Error&) {
    roles = false;
  }
  AuditLog& log = audit_log();
  std::lock_guard lock(log.mu);
  ++log.triples;
  if (!odd || !compatible) {
    ++log.other_violations;
    log.messages.push_back(where + ": triple is not odd and compatible");
  }
  if (!empty_intersection) {
    ++log.matching_violations;
    log.messages.push_back(where + ": associated matchings share an edge");
  }
  if (!roles) {
    ++log.role_violations;
    log.messages.push_back(where + ": edge-role audit failed");
  }
  return ok && odd && compatible && empty_intersection && roles;
}

}  // namespace testing_support
