#include <string>

#include "copnc/graph.hpp"

namespace copnc {

namespace {

using Edges = std::vector<CubicGraph::Endpoints>;

void require_odd_parameter(std::string_view family, std::optional<int> k) {
  if (!k || *k < 3 || *k % 2 == 0) {
    throw Error(ErrorKind::kBadParameter,
                std::string(family) + " requires an odd parameter k >= 3");
  }
}

}  // namespace

// u_1..u_k form a k-cycle, w_1..w_k t_1..t_k form a 2k-cycle, and v_i is
// joined to u_i, w_i and t_i. Edge order: u-cycle, w/t-cycle, then spokes.
CubicGraph flower(int k) {
  require_odd_parameter("flower", k);
  const FlowerNames f{k};
  Edges edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(f.u(i), f.u(i % k + 1));
  std::vector<VertexId> ring;
  for (int i = 1; i <= k; ++i) ring.push_back(f.w(i));
  for (int i = 1; i <= k; ++i) ring.push_back(f.t(i));
  for (std::size_t i = 0; i < ring.size(); ++i) edges.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(f.v(i), f.u(i));
    edges.emplace_back(f.v(i), f.w(i));
    edges.emplace_back(f.v(i), f.t(i));
  }
  return CubicGraph::build(static_cast<std::size_t>(4 * k), edges);
}

// Block j is the Petersen graph minus a path on three vertices (hub v_5, the
// 6-cycle v_1 v_3 v_4 v_2 v_8 v_7, hub adjacent to v_1 and v_2) plus v_6 on
// the central k-cycle. Blocks are chained by v_3^j v_4^{j+1} and
// v_8^j v_7^{j+1}; v_6^j v_6^{j+1} closes the central cycle.
CubicGraph goldberg(int k) {
  require_odd_parameter("goldberg", k);
  auto v = [](int i, int j) { return goldberg_vertex(i, j); };
  Edges edges;
  for (int j = 0; j < k; ++j) {
    const int next = (j + 1) % k;
    edges.emplace_back(v(1, j), v(3, j));
    edges.emplace_back(v(3, j), v(4, j));
    edges.emplace_back(v(4, j), v(2, j));
    edges.emplace_back(v(2, j), v(8, j));
    edges.emplace_back(v(8, j), v(7, j));
    edges.emplace_back(v(7, j), v(1, j));
    edges.emplace_back(v(5, j), v(1, j));
    edges.emplace_back(v(5, j), v(2, j));
    edges.emplace_back(v(5, j), v(6, j));
    edges.emplace_back(v(6, j), v(6, next));
    edges.emplace_back(v(3, j), v(4, next));
    edges.emplace_back(v(8, j), v(7, next));
  }
  return CubicGraph::build(static_cast<std::size_t>(8 * k), edges);
}

CubicGraph generate(std::string_view family, std::optional<int> k) {
  Edges edges;
  std::size_t n = 0;
  if (family == "flower") return flower(k.value_or(0));
  if (family == "goldberg") return goldberg(k.value_or(0));
  if (k) throw Error(ErrorKind::kBadParameter, std::string(family) + " takes no parameter");
  if (family == "theta") {
    n = 2;
    edges = {{0, 1}, {0, 1}, {0, 1}};
  } else if (family == "k4") {
    n = 4;
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  } else if (family == "k33") {
    n = 6;
    for (VertexId a = 0; a < 3; ++a) {
      for (VertexId b = 3; b < 6; ++b) edges.emplace_back(a, b);
    }
  } else if (family == "cube") {
    n = 8;
    for (VertexId a = 0; a < 8; ++a) {
      for (VertexId bit = 1; bit < 8; bit <<= 1) {
        if ((a & bit) == 0) edges.emplace_back(a, a | bit);
      }
    }
  } else if (family == "prism") {
    n = 6;
    edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  } else if (family == "petersen") {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
    n = 10;
    for (VertexId i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (VertexId i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (VertexId i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  } else {
    throw Error(ErrorKind::kBadParameter, "unknown graph family '" + std::string(family) + "'");
  }
  return CubicGraph::build(n, edges);
}

}  // namespace copnc
