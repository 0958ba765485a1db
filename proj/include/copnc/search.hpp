#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "copnc/partition.hpp"

namespace copnc {

/// Backtracking over markings of several partitions at once. Each vertex
/// receives one slot per partition from its candidate list; every passage
/// merges two partial trails, so closed circuits, over-long trails and
/// completed even trails are rejected as soon as they form.
struct SearchOptions {
  std::optional<std::size_t> max_length;
  bool require_odd = true;
  /// Filters per-vertex candidates before the search starts. Receives the
  /// vertex and one slot per partition.
  std::function<bool(VertexId, const std::vector<Slot>&)> allow;
  /// Stops with Error(kCapExceeded) after this many search nodes.
  std::optional<std::uint64_t> node_limit;
};

/// Candidate tuples for `partitions` partitions where the marks at each vertex
/// must cover all three slots (partitions >= 3), or any slot (partitions == 1).
/// Loop slots are normalised, so a loop vertex admits no covering tuple.
std::vector<std::vector<Slot>> covering_tuples(const CubicGraph& g, VertexId v, std::size_t partitions);

/// Visits every solution; the visitor returns false to stop. Returns the
/// number of solutions visited.
std::uint64_t search_markings(const CubicGraph& g, std::size_t partitions,
                              const SearchOptions& options,
                              const std::function<bool(const std::vector<NormalPartition>&)>& visit);

// --- single partitions -------------------------------------------------------

/// nop_from_matching on the first perfect matching, if there is one.
std::optional<NormalPartition> find_nop(const CubicGraph& g);
/// Existence of a normal odd partition decided by marking search alone
/// (independent of matchings).
bool nop_exists_by_search(const CubicGraph& g);

/// All normal odd partitions, optionally only those conformal to `m`.
/// Error(kCapExceeded) when more than `cap` exist.
std::vector<NormalPartition> enumerate_nops(const CubicGraph& g, std::size_t cap,
                                            const PerfectMatching* m = nullptr);

// --- triples -----------------------------------------------------------------

struct TripleOptions {
  std::optional<std::size_t> max_length;
  /// Require partition i to be conformal to conformal[i].
  std::optional<std::array<PerfectMatching, 3>> conformal;
  /// Extra per-vertex constraint on the three marked slots.
  std::function<bool(VertexId, const std::array<Slot, 3>&)> allow;
  /// Leaf filter on complete triples.
  std::function<bool(const Triple&)> accept;
  std::optional<std::uint64_t> node_limit;
};

std::optional<Triple> find_compatible_triple(const CubicGraph& g, const TripleOptions& options = {});
/// Returns the number of accepted triples visited.
std::uint64_t for_each_compatible_triple(const CubicGraph& g, const TripleOptions& options,
                                         const std::function<bool(const Triple&)>& visit);

/// Associated matchings of a compatible odd triple. Error(kInvariantViolation,
/// "EmptyIntersectionViolated") if some edge lies in all three.
std::array<PerfectMatching, 3> fan_raspaud_witness(const Triple& t);

/// k odd normal partitions such that at every vertex three of them mark
/// three distinct slots. Error(kCapExceeded) past `node_cap` search nodes.
std::optional<std::vector<NormalPartition>> complete_system(const CubicGraph& g, std::size_t k,
                                                            std::uint64_t node_cap = 10'000'000);

// --- sweeps ------------------------------------------------------------------

enum class SweepCheck { kConj25, kThm12, kThm5 };
const char* to_string(SweepCheck c) noexcept;
std::optional<SweepCheck> parse_sweep_check(std::string_view name);

struct SweepRecord {
  std::string id;
  std::size_t n = 0;
  bool bridgeless = false;
  bool found = false;      // conj25/thm12: triple found; thm5: partition found
  bool expected = false;   // conj25: bridgeless; thm12: bipartite; thm5: has a matching
  bool agrees = true;      // found == expected (conj25: found || !bridgeless)
  bool counterexample = false;  // conj25 only: bridgeless, exhausted without a triple
  std::optional<Triple> witness;
  std::optional<CubicGraph> graph;
  double seconds = 0;
  std::string error;       // parse or evaluation failure; the record is otherwise empty
};

/// Evaluates one graph. Never throws; failures land in `error`.
SweepRecord sweep_one(const std::string& id, const CubicGraph& g, SweepCheck check);

struct SweepInput {
  std::string id;
  std::string text;   // graph6 line, or an edge-list block
  bool graph6 = true;
};

/// Parses and checks every input on `jobs` worker threads. Records come back
/// in input order.
std::vector<SweepRecord> conjecture_sweep(const std::vector<SweepInput>& inputs, SweepCheck check,
                                          unsigned jobs = 1,
                                          const std::function<void(const SweepRecord&)>& on_record = {});

/// Splits a corpus file into sweep inputs: graph6 lines for *.g6, blank-line
/// separated edge lists otherwise. Ids are "<stem>#<index>".
std::vector<SweepInput> read_corpus(const std::string& path);

}  // namespace copnc
