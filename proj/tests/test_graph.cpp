#include <gtest/gtest.h>

#include <numeric>
#include <queue>

#include "copnc/graph.hpp"
#include "support.hpp"

using namespace copnc;
using namespace testing_support;

namespace {

bool connected_without(const CubicGraph& g, EdgeId skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (Slot s : g.slots(v)) {
      if (s.edge == skip) continue;
      const VertexId w = g.other_end(s.edge, v);
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Subsets of n/2 edges covering each vertex once, by brute force.
std::size_t brute_matchings(const CubicGraph& g) {
  const std::size_t m = g.edge_count();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    bool ok = true;
    for (EdgeId e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      if (g.is_loop(e)) ok = false;
      ++deg[g.endpoints(e).first];
      ++deg[g.endpoints(e).second];
    }
    ok = ok && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    count += ok;
  }
  return count;
}

bool brute_colorable(const CubicGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<Color> c(m, Color::kRed);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = 0; i < m; ++i, x /= 3) c[i] = static_cast<Color>(x % 3);
    bool ok = true;
    for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
      const auto& s = g.slots(v);
      ok = c[s[0].edge] != c[s[1].edge] && c[s[1].edge] != c[s[2].edge] && c[s[0].edge] != c[s[2].edge] &&
           !g.is_loop(s[0].edge) && !g.is_loop(s[1].edge) && !g.is_loop(s[2].edge);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(Generators, SizesAndShape) {
  EXPECT_EQ(generate("theta").vertex_count(), 2u);
  EXPECT_EQ(generate("k4").vertex_count(), 4u);
  EXPECT_EQ(generate("k33").vertex_count(), 6u);
  EXPECT_EQ(generate("prism").vertex_count(), 6u);
  EXPECT_EQ(generate("cube").vertex_count(), 8u);
  EXPECT_EQ(generate("petersen").vertex_count(), 10u);
  for (int k = 3; k <= 9; k += 2) {
    EXPECT_EQ(flower(k).vertex_count(), 4u * k);
    EXPECT_EQ(goldberg(k).vertex_count(), 8u * k);
    EXPECT_TRUE(flower(k).is_simple());
    EXPECT_TRUE(goldberg(k).is_simple());
    EXPECT_TRUE(is_bridgeless(flower(k)));
    EXPECT_TRUE(is_bridgeless(goldberg(k)));
  }
  EXPECT_FALSE(generate("theta").is_simple());
  EXPECT_TRUE(generate("k4").has_triangle());
  EXPECT_FALSE(generate("petersen").has_triangle());
}

TEST(Generators, BadParameters) {
  EXPECT_THROW(flower(4), Error);
  EXPECT_THROW(flower(1), Error);
  EXPECT_THROW(goldberg(2), Error);
  EXPECT_THROW(generate("nonsense"), Error);
  EXPECT_THROW(generate("k4", 3), Error);
}

TEST(Generators, FlowerNaming) {
  const CubicGraph g = flower(5);
  const FlowerNames f{5};
  for (int i = 1; i <= 5; ++i) {
    const int j = i % 5 + 1;
    EXPECT_TRUE(g.edge_between(f.v(i), f.u(i)));
    EXPECT_TRUE(g.edge_between(f.v(i), f.w(i)));
    EXPECT_TRUE(g.edge_between(f.v(i), f.t(i)));
    EXPECT_TRUE(g.edge_between(f.u(i), f.u(j)));
  }
  // w and t close up into one cycle of length 2k.
  EXPECT_TRUE(g.edge_between(f.w(5), f.t(1)));
  EXPECT_TRUE(g.edge_between(f.t(5), f.w(1)));
}

TEST(Generators, Snarks) {
  EXPECT_EQ(chromatic_index(generate("petersen")), 4);
  EXPECT_EQ(chromatic_index(flower(3)), 4);
  EXPECT_EQ(chromatic_index(flower(5)), 4);
  EXPECT_EQ(chromatic_index(goldberg(3)), 4);
  EXPECT_EQ(chromatic_index(generate("k4")), 3);
  EXPECT_EQ(chromatic_index(generate("cube")), 3);
}

TEST(Build, RejectsNonCubic) {
  const std::vector<CubicGraph::Endpoints> path = {{0, 1}, {1, 2}};
  try {
    CubicGraph::build(3, path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonCubic);
  }
  const std::vector<CubicGraph::Endpoints> bad = {{0, 7}};
  EXPECT_THROW(CubicGraph::build(2, bad), Error);
}

TEST(Formats, Graph6RoundTrip) {
  for (const auto& [id, g] : simple_graphs({4, 6, 8, 10})) {
    const CubicGraph back = parse_graph6(to_graph6(g));
    EXPECT_EQ(to_graph6(back), to_graph6(g)) << id;
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
  }
  EXPECT_EQ(to_graph6(generate("k4")), "C~");
}

TEST(Formats, EdgeListRoundTrip) {
  for (const auto& [id, g] : multigraphs_up_to(6)) {
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g) << id;
  }
  EXPECT_THROW(parse_edge_list("2 3\n0 1\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("x y"), Error);
  EXPECT_THROW(parse_graph6("~~~~"), Error);
}

TEST(Corpus, CountsMatchPublishedEnumerations) {
  // Connected cubic multigraphs with loops allowed, and loopless ones on 12.
  EXPECT_EQ(corpus("cubic_n02.txt").size(), 2u);
  EXPECT_EQ(corpus("cubic_n04.txt").size(), 5u);
  EXPECT_EQ(corpus("cubic_n06.txt").size(), 17u);
  EXPECT_EQ(corpus("cubic_n08.txt").size(), 71u);
  EXPECT_EQ(corpus("cubic_n10.txt").size(), 388u);
  EXPECT_EQ(corpus("cubic_loopless_n12.txt").size(), 509u);
  EXPECT_EQ(simple_graphs({4}).size(), 1u);
  EXPECT_EQ(simple_graphs({6}).size(), 2u);
  EXPECT_EQ(simple_graphs({8}).size(), 5u);
  EXPECT_EQ(simple_graphs({10}).size(), 19u);
  EXPECT_EQ(simple_graphs({12}).size(), 85u);
}

TEST(Bridges, MatchBruteForce) {
  for (const auto& [id, g] : multigraphs_up_to(8)) {
    std::vector<EdgeId> expect;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!connected_without(g, e)) expect.push_back(e);
    }
    EXPECT_EQ(bridges(g), expect) << id;
  }
}

TEST(Matchings, CountMatchesBruteForce) {
  EXPECT_EQ(perfect_matchings(generate("k4")).size(), 3u);
  EXPECT_EQ(perfect_matchings(generate("k33")).size(), 6u);
  EXPECT_EQ(perfect_matchings(generate("cube")).size(), 9u);
  EXPECT_EQ(perfect_matchings(generate("petersen")).size(), 6u);
  for (const auto& [id, g] : multigraphs_up_to(8)) {
    const auto all = perfect_matchings(g);
    EXPECT_EQ(all.size(), brute_matchings(g)) << id;
    for (const auto& m : all) EXPECT_TRUE(is_perfect_matching(g, m));
    EXPECT_EQ(first_perfect_matching(g).has_value(), !all.empty());
  }
}

TEST(Coloring, MatchesBruteForce) {
  for (const auto& [id, g] : multigraphs_up_to(6)) {
    const auto c = proper_3_edge_coloring(g);
    EXPECT_EQ(c.has_value(), brute_colorable(g)) << id;
    if (c) EXPECT_TRUE(is_proper_coloring(g, *c));
  }
}

TEST(Bipartition, SidesAreProper) {
  for (const auto& [id, g] : simple_graphs({4, 6, 8, 10})) {
    const auto side = bipartition(g);
    if (!side) continue;
    for (const auto& [a, b] : g.edges()) EXPECT_NE((*side)[a], (*side)[b]) << id;
  }
  EXPECT_TRUE(is_bipartite(generate("k33")));
  EXPECT_TRUE(is_bipartite(generate("cube")));
  EXPECT_FALSE(is_bipartite(generate("k4")));
}
