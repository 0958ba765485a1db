#include <algorithm>

#include "copnc/construct.hpp"
#include "copnc/search.hpp"

namespace copnc {

namespace {

EdgeId third_edge(const CubicGraph& g, VertexId v, EdgeId p, EdgeId q) {
  for (Slot s : g.slots(v)) {
    if (s.edge != p && s.edge != q) return s.edge;
  }
  return p;
}

// Drops `gone` vertices, renumbering the rest in order.
struct Renumbering {
  std::vector<VertexId> new_of_vertex;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  std::vector<CubicGraph::Endpoints> edges;
};

Renumbering renumber(const CubicGraph& g, const std::vector<bool>& gone) {
  Renumbering r;
  r.new_of_vertex.assign(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    r.new_of_vertex[v] = static_cast<VertexId>(r.vertex_map.size());
    r.vertex_map.push_back(v);
  }
  return r;
}

}  // namespace

std::optional<Contraction> contract_digon(const CubicGraph& g, EdgeId p) {
  if (p >= g.edge_count() || g.is_loop(p)) return std::nullopt;
  const auto [u, v] = g.endpoints(p);
  std::optional<EdgeId> q;
  int parallel = 0;
  for (Slot s : g.slots(u)) {
    if (s.edge != p && g.other_end(s.edge, u) == v && !g.is_loop(s.edge)) {
      q = s.edge;
      ++parallel;
    }
  }
  if (parallel != 1) return std::nullopt;
  const EdgeId a = third_edge(g, u, p, *q), b = third_edge(g, v, p, *q);
  if (a == b || g.is_loop(a) || g.is_loop(b)) return std::nullopt;
  const VertexId x = g.other_end(a, u), y = g.other_end(b, v);
  if (x == y) return std::nullopt;

  std::vector<bool> gone(g.vertex_count(), false), dropped(g.edge_count(), false);
  gone[u] = gone[v] = true;
  dropped[p] = dropped[*q] = dropped[a] = dropped[b] = true;
  Renumbering r = renumber(g, gone);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dropped[e]) continue;
    r.edges.emplace_back(r.new_of_vertex[g.endpoints(e).first], r.new_of_vertex[g.endpoints(e).second]);
    r.edge_map.push_back(e);
  }
  Contraction c;
  c.new_edge = static_cast<EdgeId>(r.edges.size());
  r.edges.emplace_back(r.new_of_vertex[x], r.new_of_vertex[y]);
  r.edge_map.push_back(a);
  c.graph = CubicGraph::build(r.vertex_map.size(), r.edges);
  c.vertex_map = std::move(r.vertex_map);
  c.edge_map = std::move(r.edge_map);
  return c;
}

std::optional<Contraction> contract_triangle(const CubicGraph& g, VertexId a, VertexId b, VertexId c) {
  const std::array<VertexId, 3> tri = {a, b, c};
  if (a == b || b == c || a == c) return std::nullopt;
  std::vector<bool> dropped(g.edge_count(), false);
  for (int i = 0; i < 3; ++i) {
    const VertexId x = tri[i], y = tri[(i + 1) % 3];
    int count = 0;
    for (Slot s : g.slots(x)) {
      if (!g.is_loop(s.edge) && g.other_end(s.edge, x) == y) {
        ++count;
        dropped[s.edge] = true;
      }
    }
    if (count != 1) return std::nullopt;
  }
  std::vector<bool> gone(g.vertex_count(), false);
  gone[b] = gone[c] = true;
  Renumbering r = renumber(g, gone);
  auto image = [&](VertexId x) { return (x == b || x == c) ? r.new_of_vertex[a] : r.new_of_vertex[x]; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dropped[e]) continue;
    r.edges.emplace_back(image(g.endpoints(e).first), image(g.endpoints(e).second));
    r.edge_map.push_back(e);
  }
  Contraction out;
  out.new_vertex = r.new_of_vertex[a];
  out.graph = CubicGraph::build(r.vertex_map.size(), r.edges);
  out.vertex_map = std::move(r.vertex_map);
  out.edge_map = std::move(r.edge_map);
  return out;
}

namespace {

struct Reduction {
  bool digon;
  CubicGraph before;
  Contraction contraction;
  // digon: u is the digon vertex on the first endpoint's side
  VertexId u = 0, v = 0;
  EdgeId p = 0, q = 0, a = 0, b = 0;
  // triangle
  std::array<VertexId, 3> tri{};
};

std::optional<Reduction> reduce_once(const CubicGraph& g) {
  for (EdgeId p = 0; p < g.edge_count(); ++p) {
    auto c = contract_digon(g, p);
    if (!c) continue;
    Reduction r{true, g, std::move(*c)};
    std::tie(r.u, r.v) = g.endpoints(p);
    r.p = p;
    for (Slot s : g.slots(r.u)) {
      if (s.edge != p && g.other_end(s.edge, r.u) == r.v) r.q = s.edge;
    }
    r.a = third_edge(g, r.u, r.p, r.q);
    r.b = third_edge(g, r.v, r.p, r.q);
    if (r.p > r.q) std::swap(r.p, r.q);
    return r;
  }
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    const auto nb = g.neighbors(a);
    for (VertexId b : nb) {
      for (VertexId c : nb) {
        if (!(a < b && b < c) || !g.edge_between(b, c)) continue;
        auto con = contract_triangle(g, a, b, c);
        if (!con) continue;
        Reduction r{false, g, std::move(*con)};
        r.tri = {a, b, c};
        return r;
      }
    }
  }
  return std::nullopt;
}

ConformalTriple lift(const Reduction& r, const ConformalTriple& t) {
  const CubicGraph& small = r.contraction.graph;
  const std::size_t n = small.vertex_count();
  const EdgeId m = static_cast<EdgeId>(small.edge_count());
  Extension ext = r.digon ? digon_extend(small, r.contraction.new_edge, t)
                          : triangle_extend(small, r.contraction.new_vertex, t);

  std::vector<VertexId> vmap(r.contraction.vertex_map);
  std::vector<EdgeId> emap(r.contraction.edge_map);
  vmap.resize(n + 2);
  emap.resize(m + 3);
  if (r.digon) {
    const EdgeId ne = r.contraction.new_edge;
    const VertexId xs = ext.graph.other_end(ne, static_cast<VertexId>(n));
    const bool straight = vmap[xs] == r.before.other_end(r.a, r.u);
    vmap[n] = straight ? r.u : r.v;
    vmap[n + 1] = straight ? r.v : r.u;
    emap[ne] = straight ? r.a : r.b;
    emap[m] = straight ? r.b : r.a;
    emap[m + 1] = r.p;
    emap[m + 2] = r.q;
  } else {
    const VertexId z = r.contraction.new_vertex;
    std::array<VertexId, 3> corner{};
    // Corners of the extended graph: z keeps its first slot, n and n + 1 the others.
    const std::array<VertexId, 3> ext_corner = {z, static_cast<VertexId>(n), static_cast<VertexId>(n + 1)};
    for (int i = 0; i < 3; ++i) {
      EdgeId outer = 0;
      for (Slot s : ext.graph.slots(ext_corner[i])) {
        if (s.edge < m) outer = s.edge;
      }
      const EdgeId big = emap[outer];
      const auto [e0, e1] = r.before.endpoints(big);
      corner[i] = std::find(r.tri.begin(), r.tri.end(), e0) != r.tri.end() ? e0 : e1;
      vmap[ext_corner[i]] = corner[i];
    }
    emap[m] = *r.before.edge_between(corner[0], corner[1]);
    emap[m + 1] = *r.before.edge_between(corner[1], corner[2]);
    emap[m + 2] = *r.before.edge_between(corner[0], corner[2]);
  }

  EdgeColoring coloring(r.before.edge_count());
  for (EdgeId e = 0; e < ext.graph.edge_count(); ++e) coloring[emap[e]] = ext.triple.coloring[e];
  ConformalTriple out{{relabel(ext.triple.partitions[0], r.before, vmap, emap),
                       relabel(ext.triple.partitions[1], r.before, vmap, emap),
                       relabel(ext.triple.partitions[2], r.before, vmap, emap)},
                      std::move(coloring)};
  if (auto why = check_conformal_triple(r.before, out)) {
    throw Error(ErrorKind::kInvariantViolation, "lifted triple is invalid: " + *why);
  }
  return out;
}

ConformalTriple solve_base(const CubicGraph& g) {
  TripleOptions options;
  options.accept = [](const Triple& t) {
    auto m0 = associated_matching(t[0]), m1 = associated_matching(t[1]), m2 = associated_matching(t[2]);
    for (EdgeId e : m0) {
      if (std::binary_search(m1.begin(), m1.end(), e) || std::binary_search(m2.begin(), m2.end(), e)) {
        return false;
      }
    }
    for (EdgeId e : m1) {
      if (std::binary_search(m2.begin(), m2.end(), e)) return false;
    }
    return true;
  };
  auto t = find_compatible_triple(g, options);
  if (!t) throw Error(ErrorKind::kSearchExhausted, "SearchExhausted: base graph has no conformal triple");
  EdgeColoring coloring(g.edge_count());
  for (int c = 0; c < 3; ++c) {
    for (EdgeId e : associated_matching((*t)[c])) coloring[e] = static_cast<Color>(c);
  }
  return ConformalTriple{*t, std::move(coloring)};
}

}  // namespace

ConformalTriple conformal_triple_general(const CubicGraph& g, const ConformalOptions& options,
                                         GeneralTelemetry* telemetry) {
  GeneralTelemetry local;
  GeneralTelemetry& tel = telemetry ? *telemetry : local;
  tel = {};
  if (g.has_loop() || !proper_3_edge_coloring(g)) {
    throw Error(ErrorKind::kPrecondition, "NotThreeEdgeColorable");
  }
  std::vector<Reduction> steps;
  CubicGraph core = g;
  while (core.vertex_count() > 4) {
    auto r = reduce_once(core);
    if (!r) break;
    (r->digon ? tel.digons : tel.triangles)++;
    core = r->contraction.graph;
    steps.push_back(std::move(*r));
  }
  tel.core_vertices = core.vertex_count();

  std::optional<ConformalTriple> t;
  if (core.vertex_count() <= 4) {
    tel.base_case = true;
    t = solve_base(core);
  } else {
    auto coloring = proper_3_edge_coloring(core);
    if (!coloring) throw Error(ErrorKind::kInvariantViolation, "contraction lost colourability");
    t = conformal_triple(core, *coloring, options, &tel.core);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) t = lift(*it, *t);
  return std::move(*t);
}

}  // namespace copnc
