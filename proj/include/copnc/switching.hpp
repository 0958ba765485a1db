#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copnc/partition.hpp"

namespace copnc {

/// Which end of the trail T_i (where v is internal) plays the role of x in a
/// switch, relative to the stored orientation of T_i.
enum class Branch { kFront, kBack };

/// Switch of p on v. When v is internal in T_i and ends T_j != T_i, returns
/// T - {T_i, T_j} + {T_i(x,v) + T_j, T_i(v,y)}; when T_i == T_j, reverses the
/// segment between the internal visit and the end at v. Only marked(v) changes.
/// Throws Error(kBadBranch) if the branch names an end equal to v.
NormalPartition switch_at(const CubicGraph& g, const NormalPartition& p, VertexId v, Branch branch);

/// Every distinct switch result at v (one or two partitions).
std::vector<NormalPartition> switches(const CubicGraph& g, const NormalPartition& p, VertexId v);

/// Switch results at v that are again odd.
std::vector<NormalPartition> odd_switches(const CubicGraph& g, const NormalPartition& p, VertexId v);

/// The switch at v whose result is odd and conformal to m, if any. Throws
/// Error(kNotConformal) when p itself is not conformal to m.
std::optional<NormalPartition> conformal_switch(const CubicGraph& g, const NormalPartition& p,
                                                const PerfectMatching& m, VertexId v);

/// Number of conformal_switch calls that found more than one qualifying
/// candidate. Expected to stay zero; exposed as telemetry.
std::size_t conformal_ambiguity_count();

enum class MoveKind { kPlain, kOdd, kConformal };

/// Breadth-first exploration of the class of `start` under the chosen moves.
struct SwitchClass {
  std::vector<NormalPartition> members;  // in discovery order; members[0] == start
  std::size_t diameter = 0;              // of the move graph restricted to the class
};

/// Throws Error(kCapExceeded) when more than `cap` partitions are reached.
/// For kConformal, `matching` must be given and `start` conformal to it.
SwitchClass switch_class(const CubicGraph& g, const NormalPartition& start, MoveKind kind,
                         const PerfectMatching* matching, std::size_t cap);

/// Splits `partitions` into classes of the move graph (components, using
/// only moves whose targets are again in the set). Returns one class index per
/// input partition; class ids are assigned in order of first appearance.
std::vector<std::size_t> switch_components(const CubicGraph& g,
                                           const std::vector<NormalPartition>& partitions,
                                           MoveKind kind, const PerfectMatching* matching,
                                           std::size_t* class_count = nullptr);

}  // namespace copnc
