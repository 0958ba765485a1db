#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copnc/partition.hpp"

namespace copnc {

/// Outgoing edge o(v) of every vertex along the cycles of the 2-factor G - M.
struct Orientation {
  std::vector<EdgeId> out;
};

/// Vertex sequences of the cycles of G - M, each starting at its lowest vertex.
std::vector<std::vector<VertexId>> two_factor_cycles(const CubicGraph& g, const PerfectMatching& m);

/// Each cycle traversed from its lowest vertex, leaving along the smaller
/// edge id.
Orientation default_orientation(const CubicGraph& g, const PerfectMatching& m);
/// Default orientation with every cycle whose bit is set traversed backwards.
Orientation orientation_with_flips(const CubicGraph& g, const PerfectMatching& m,
                                   const std::vector<bool>& flip);

/// Trails next(u) o(u) u uv v o(v) next(v), one per matching edge uv.
/// Throws Error(kBadParameter) if m is not a perfect matching.
NormalPartition nop_from_matching(const CubicGraph& g, const PerfectMatching& m,
                                  const Orientation* orientation = nullptr);
/// Uses the first perfect matching; Error(kPrecondition, "NoMatching") if none.
NormalPartition nop_from_matching(const CubicGraph& g);

struct ConformalTriple {
  Triple partitions;      // indexed by Color: partitions[c] is conformal to class c
  EdgeColoring coloring;

  const NormalPartition& operator[](Color c) const { return partitions[static_cast<int>(c)]; }
};

/// Checks normality (by construction), oddness, conformality to each colour
/// class and pairwise compatibility. Returns a description of the first
/// failure, or nullopt.
std::optional<std::string> check_conformal_triple(const CubicGraph& g, const ConformalTriple& t);

/// Bipartite graphs only: Error(kPrecondition, "NotBipartite") otherwise.
/// Side 0 of the bipartition plays the filled vertex of each trail type.
ConformalTriple bipartite_triple(const CubicGraph& g);

struct ConformalOptions {
  std::uint64_t seed = 0;
  std::size_t move_budget = 1'000'000;
  /// After the budget, run an exhaustive conformal search before giving up.
  bool exhaustive_fallback = true;
};

struct ConformalTelemetry {
  std::size_t initial_a = 0;
  std::size_t proof_steps = 0;      // accepted proof-guided sequences that shrank A
  std::size_t relocations = 0;      // accepted proof-guided sequences that kept |A|
  std::size_t random_moves = 0;
  std::size_t reseeds = 0;
  bool exhaustive = false;
  /// "seed", "proof", "walk" or "exhaustive": the stage that reached A = {}.
  std::string path;
};

/// Three compatible partitions conformal to the colour classes of a proper
/// colouring. Intended for simple triangle-free graphs, but only requires the
/// colouring to be proper. Error(kSearchExhausted) when every stage fails.
ConformalTriple conformal_triple(const CubicGraph& g, const EdgeColoring& coloring,
                                 const ConformalOptions& options = {},
                                 ConformalTelemetry* telemetry = nullptr);

struct Extension {
  CubicGraph graph;
  ConformalTriple triple;
};

/// Subdivides e = xy by u (next to x) and v (next to y) and joins u, v by a
/// second edge. New vertex ids: u = n, v = n + 1. Edge e becomes xu; vy gets
/// id m, and the two u-v edges get ids m + 1 and m + 2. x is the endpoint at
/// which e ends a trail of the partition that plays the Blue role.
/// Error(kNotConformal, "NotConformalTriple") on bad input.
Extension digon_extend(const CubicGraph& g, EdgeId e, const ConformalTriple& t);

/// Replaces v by a triangle: v keeps the edge in its first slot, the edges of
/// its second and third slots move to new vertices n and n + 1. Triangle edge
/// ids: m = (v, n), m + 1 = (n, n + 1), m + 2 = (v, n + 1).
Extension triangle_extend(const CubicGraph& g, VertexId v, const ConformalTriple& t);

/// Inverse structural operations. `vertex_map` / `edge_map` send ids of the
/// contracted graph to ids of g; the new edge (digon) maps to the through-edge
/// at the first endpoint.
struct Contraction {
  CubicGraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  EdgeId new_edge = 0;       // digon contraction: the edge replacing the digon
  VertexId new_vertex = 0;   // triangle contraction: the vertex replacing the triangle
};
/// p, q parallel edges between distinct u and v whose third edges are not
/// shared and whose other neighbours differ.
std::optional<Contraction> contract_digon(const CubicGraph& g, EdgeId p);
/// The triangle through the three given vertices, which must be pairwise
/// joined by single edges.
std::optional<Contraction> contract_triangle(const CubicGraph& g, VertexId a, VertexId b, VertexId c);

struct GeneralTelemetry {
  std::size_t digons = 0;
  std::size_t triangles = 0;
  std::size_t core_vertices = 0;
  bool base_case = false;
  ConformalTelemetry core;
};

/// Contracts digons and triangles down to a simple triangle-free core (or a
/// graph on at most 4 vertices, solved exhaustively), solves the core and
/// replays the gadgets. Error(kPrecondition, "NotThreeEdgeColorable").
ConformalTriple conformal_triple_general(const CubicGraph& g, const ConformalOptions& options = {},
                                         GeneralTelemetry* telemetry = nullptr);

}  // namespace copnc
