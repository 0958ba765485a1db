#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copnc/graph.hpp"

namespace copnc {

/// Alternating vertex/edge sequence v_0 e_1 v_1 ... e_k v_k with distinct
/// edges. Stored with an orientation; partitions compare trails up to reversal.
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  Trail reversed() const;

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Per-vertex marked slot. Loops are normalised to end 0: marking either end
/// of a loop yields the same trails.
using Marking = std::vector<Slot>;

/// A partition of E(G) into trails in which every vertex is internal exactly
/// once and the end of exactly one trail. Only constructible through
/// make_partition / validate_normal / trails_from_marking, so every instance
/// is valid for the graph it was built against.
class NormalPartition {
 public:
  const std::vector<Trail>& trails() const { return trails_; }
  std::size_t size() const { return trails_.size(); }

  /// The end slot at v; its edge is the marked edge e_T(v).
  Slot marked(VertexId v) const { return marking_[v]; }
  EdgeId marked_edge(VertexId v) const { return marking_[v].edge; }
  const Marking& marking() const { return marking_; }
  /// The two slots of v other than the marked one.
  std::array<Slot, 2> internal_passage(const CubicGraph& g, VertexId v) const;

  std::size_t max_length() const;

  /// Each trail oriented to its lexicographically smaller direction, trails
  /// sorted, flattened with length prefixes. Equal iff the partitions are.
  std::vector<std::uint32_t> canonical_form() const;

  friend bool operator==(const NormalPartition& a, const NormalPartition& b) {
    return a.marking_ == b.marking_;
  }

 private:
  friend class PartitionFactory;
  NormalPartition(std::vector<Trail> trails, Marking marking)
      : trails_(std::move(trails)), marking_(std::move(marking)) {}

  std::vector<Trail> trails_;
  Marking marking_;
};

using Triple = std::array<NormalPartition, 3>;

enum class Violation {
  kBadTrail,
  kEdgeUncovered,
  kEdgeDoubleCovered,
  kVertexNeverInternal,
  kVertexEndCount,
};
const char* to_string(Violation v) noexcept;

struct Diagnostic {
  Violation kind;
  std::uint32_t subject;  // vertex, edge or trail index depending on kind
  std::size_t count = 0;
  std::string message;
};

struct Validation {
  std::optional<NormalPartition> partition;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return partition.has_value(); }
};

class PartitionError : public Error {
 public:
  explicit PartitionError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class CycleError : public Error {
 public:
  explicit CycleError(std::vector<EdgeId> cycle);
  const std::vector<EdgeId>& cycle() const { return cycle_; }

 private:
  std::vector<EdgeId> cycle_;
};

/// Checks every normality condition and reports all violations.
Validation validate_normal(const CubicGraph& g, std::vector<Trail> trails);
/// As validate_normal, throwing PartitionError on failure.
NormalPartition make_partition(const CubicGraph& g, std::vector<Trail> trails);

Marking normalize_marking(const CubicGraph& g, Marking marking);
/// Pairs the two unmarked slots at each vertex and follows the transitions
/// from every marked slot. Throws CycleError when some edges close up into a
/// circuit that never reaches a marked slot. Trails start at their lower end.
NormalPartition trails_from_marking(const CubicGraph& g, const Marking& marking);
/// Marking that selects, at each vertex v, the slot of the edge to neighbor[v].
/// Simple graphs only.
Marking marking_from_neighbors(const CubicGraph& g, const std::vector<VertexId>& neighbor);

/// Edges at even 1-based positions: deleting one leaves two odd subtrails.
/// Empty for a length-1 trail.
std::vector<EdgeId> odd_edges(const Trail& t);
bool is_odd(const NormalPartition& p);
/// Union of the odd edges. Throws Error(kNotOdd) unless p is odd.
PerfectMatching associated_matching(const NormalPartition& p);
bool is_conformal(const NormalPartition& p, const PerfectMatching& m);

/// Vertices whose marked slots coincide.
std::vector<VertexId> compatibility_set(const NormalPartition& a, const NormalPartition& b);
/// Union of the three pairwise agreement sets.
std::vector<VertexId> triple_set(const NormalPartition& a, const NormalPartition& b,
                                 const NormalPartition& c);
inline bool are_compatible(const NormalPartition& a, const NormalPartition& b) {
  return compatibility_set(a, b).empty();
}
inline bool is_compatible_triple(const Triple& t) { return triple_set(t[0], t[1], t[2]).empty(); }

struct PartitionStats {
  std::uint64_t mu_numerator = 0;
  std::uint64_t mu_denominator = 1;
  std::map<std::size_t, std::size_t> n_of;  // trail length -> count
  std::size_t max_length = 0;
  long long balance = 0;                    // sum over i of (3 - i) * n_of[i]
};
PartitionStats stats(const NormalPartition& p);

struct EdgeRoleAudit {
  std::size_t checked = 0;
  std::size_t internal_in_one = 0;
  std::size_t internal_in_two = 0;
};
/// For every edge xy with x, y outside the agreement set: internal in exactly
/// one or exactly two partitions, and in the latter case a length-1 trail of
/// the third. Throws Error(kInvariantViolation) otherwise.
EdgeRoleAudit edge_role_audit(const CubicGraph& g, const Triple& t);

/// Per-vertex view of where each vertex sits in a partition.
struct VertexRoles {
  std::vector<std::size_t> internal_trail;  // trail where v is internal
  std::vector<std::size_t> internal_pos;    // index into that trail's vertices
  std::vector<std::size_t> end_trail;       // trail having v as an end
  std::vector<bool> end_is_back;            // v is the back end of end_trail
};
VertexRoles vertex_roles(const NormalPartition& p);

/// Rebuilds a partition of `target` from one of `source` through explicit
/// vertex and edge correspondences (an isomorphism source -> target).
NormalPartition relabel(const NormalPartition& p, const CubicGraph& target,
                        const std::vector<VertexId>& vertex_map,
                        const std::vector<EdgeId>& edge_map);

}  // namespace copnc
