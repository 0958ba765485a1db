#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "copnc/partition.hpp"

namespace copnc {

/// Per partition, the neighbour each vertex marks (simple graphs only).
using NeighborMarks = std::array<std::vector<VertexId>, 3>;

NeighborMarks neighbor_marks(const CubicGraph& g, const Triple& t);
Triple triple_from_neighbor_marks(const CubicGraph& g, const NeighborMarks& marks);

/// A Flower vertex name: letter in "uvwt", index 1..k.
struct FlowerName {
  char letter;
  int index;
  friend bool operator==(const FlowerName&, const FlowerName&) = default;
};

/// A Goldberg neighbour relative to the marking vertex: v_i in the block
/// `offset` positions further along (-1, 0 or +1).
struct GoldbergRef {
  int i;
  int offset;
  friend bool operator==(const GoldbergRef&, const GoldbergRef&) = default;
};

/// Everything the family constructions replay. Frozen in the library and
/// re-derivable from scratch by constrained search.
struct FamilyData {
  NeighborMarks petersen;
  NeighborMarks flower3;
  /// Marks of u_3, v_3, w_3, t_3 of F_{k+2} right after an insertion step.
  std::array<std::array<FlowerName, 4>, 3> flower_gadget;
  NeighborMarks goldberg3;
  /// Marks of the two inserted blocks (v_1..v_8 of the first, then of the second).
  std::array<std::array<GoldbergRef, 16>, 3> goldberg_gadget;

  friend bool operator==(const FamilyData&, const FamilyData&) = default;
};

const FamilyData& frozen_family_data();
/// Re-runs every derivation. Deterministic; slow (seconds).
FamilyData derive_family_data();
/// C++ initialiser text for `data`, as stored in the library.
std::string family_data_source(const FamilyData& data);

Triple petersen_triple();
/// Error(kBadParameter) unless k is odd and >= 3.
Triple flower_triple(int k);
Triple goldberg_triple(int k);
/// Same, but from explicitly supplied data.
Triple flower_triple(int k, const FamilyData& data);
Triple goldberg_triple(int k, const FamilyData& data);

/// Violations of the boundary marks at u_1..t_2 and of the odd-edge side
/// conditions for a triple on flower(k). Empty when all hold.
std::vector<std::string> flower_boundary_violations(int k, const Triple& t);

/// Automorphisms of a simple cubic graph, as vertex permutations.
std::vector<std::vector<VertexId>> automorphisms(const CubicGraph& g);
/// Whether some automorphism carries partition a onto partition b.
bool isomorphic_partitions(const CubicGraph& g, const NormalPartition& a, const NormalPartition& b,
                           const std::vector<std::vector<VertexId>>& autos);

}  // namespace copnc
