#include <gtest/gtest.h>

#include <numeric>

#include "copnc/construct.hpp"
#include "copnc/partition.hpp"
#include "copnc/search.hpp"
#include "support.hpp"

using namespace copnc;
using namespace testing_support;

namespace {

std::vector<std::set<EdgeId>> edge_sets(const std::vector<Trail>& trails) {
  std::vector<std::set<EdgeId>> out;
  for (const Trail& t : trails) out.emplace_back(t.edges.begin(), t.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Calls visit on all 3^n markings of a loopless graph.
void each_marking(const CubicGraph& g, const std::function<void(const std::vector<Slot>&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<Slot> m(n);
  std::vector<int> digit(n, 0);
  while (true) {
    for (VertexId v = 0; v < n; ++v) m[v] = g.slots(v)[digit[v]];
    visit(m);
    std::size_t i = 0;
    while (i < n && ++digit[i] == 3) digit[i++] = 0;
    if (i == n) return;
  }
}

std::vector<CorpusGraph> loopless_up_to(std::size_t n) {
  std::vector<CorpusGraph> out;
  for (auto& g : multigraphs_up_to(n)) {
    if (!g.graph.has_loop()) out.push_back(std::move(g));
  }
  return out;
}

Trail trail(std::vector<VertexId> v, std::vector<EdgeId> e) { return Trail{std::move(v), std::move(e)}; }

}  // namespace

TEST(Validate, AcceptsMatchingPartition) {
  const CubicGraph g = generate("k4");
  const NormalPartition p = nop_from_matching(g);
  EXPECT_TRUE(validate_normal(g, p.trails()).ok());
  EXPECT_TRUE(oracle_is_normal(g, p.trails()));
  EXPECT_EQ(p.size(), 2u);
}

TEST(Validate, ReportsDuplicatedEdge) {
  const CubicGraph g = generate("k4");
  auto trails = nop_from_matching(g).trails();
  trails[1].edges[0] = trails[0].edges[0];
  const Validation v = validate_normal(g, trails);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.diagnostics.empty());
  try {
    make_partition(g, trails);
    FAIL();
  } catch (const PartitionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAPartition);
    EXPECT_FALSE(e.diagnostics().empty());
  }
}

TEST(Validate, ReportsEveryViolationKind) {
  const CubicGraph g = generate("theta");  // edges 0, 1, 2 all between 0 and 1
  // One trail 0-1-0 through edges 0, 1 leaves edge 2 uncovered and vertex 0 an end twice.
  const Validation v = validate_normal(g, {trail({0, 1, 0}, {0, 1})});
  ASSERT_FALSE(v.ok());
  std::set<Violation> kinds;
  for (const auto& d : v.diagnostics) kinds.insert(d.kind);
  EXPECT_TRUE(kinds.count(Violation::kEdgeUncovered));
  EXPECT_TRUE(kinds.count(Violation::kVertexEndCount));
  // Edge and vertex sequences that do not fit together.
  EXPECT_TRUE(validate_normal(g, {trail({0, 0}, {0})}).diagnostics.size() > 0);
  EXPECT_TRUE(validate_normal(g, {trail({0, 1}, {0, 1})}).diagnostics.size() > 0);
}

TEST(Validate, ThetaPartitions) {
  const CubicGraph g = generate("theta");
  // 0 -e0- 1 -e1- 0 -e2- 1: one trail of length 3 covers everything.
  const NormalPartition p = make_partition(g, {trail({0, 1, 0, 1}, {0, 1, 2})});
  EXPECT_TRUE(is_odd(p));
  EXPECT_EQ(associated_matching(p), PerfectMatching{1});
}

TEST(Marking, AgreesWithHandWalkOnEveryMarking) {
  for (const auto& [id, g] : loopless_up_to(6)) {
    each_marking(g, [&](const std::vector<Slot>& m) {
      const auto expect = oracle_trails(g, m);
      try {
        const NormalPartition p = trails_from_marking(g, m);
        ASSERT_TRUE(expect.has_value()) << id;
        EXPECT_EQ(edge_sets(p.trails()), edge_sets(*expect)) << id;
        EXPECT_EQ(p.marking(), m);
        EXPECT_TRUE(oracle_is_normal(g, p.trails()));
      } catch (const CycleError& e) {
        EXPECT_FALSE(expect.has_value()) << id;
        EXPECT_FALSE(e.cycle().empty());
      }
    });
  }
}

TEST(Marking, LoopsAreNormalised) {
  // Two vertices, each with a loop, joined by an edge.
  const std::vector<CubicGraph::Endpoints> edges = {{0, 0}, {0, 1}, {1, 1}};
  const CubicGraph g = CubicGraph::build(2, edges);
  const Marking a = normalize_marking(g, {Slot{0, 1}, Slot{1, 1}});
  EXPECT_EQ(a[0], (Slot{0, 0}));
}

TEST(Enumerate, NopCountMatchesBruteForce) {
  for (const auto& [id, g] : loopless_up_to(8)) {
    std::size_t brute = 0;
    each_marking(g, [&](const std::vector<Slot>& m) {
      const auto t = oracle_trails(g, m);
      if (!t) return;
      brute += std::all_of(t->begin(), t->end(), [](const Trail& x) { return x.edges.size() % 2 == 1; });
    });
    const auto nops = enumerate_nops(g, 1'000'000);
    EXPECT_EQ(nops.size(), brute) << id;
    EXPECT_EQ(brute > 0, first_perfect_matching(g).has_value()) << id;
  }
}

TEST(Odd, AssociatedMatchingIsPerfect) {
  for (const auto& [id, g] : multigraphs_up_to(8)) {
    for (const NormalPartition& p : enumerate_nops(g, 100'000)) {
      const PerfectMatching m = associated_matching(p);
      EXPECT_TRUE(is_perfect_matching(g, m)) << id;
      EXPECT_EQ(std::set<EdgeId>(m.begin(), m.end()), oracle_matching(p));
      EXPECT_TRUE(is_conformal(p, m));
      EXPECT_EQ(p.size() * 2, g.vertex_count());
    }
  }
}

TEST(Odd, LengthBalanceIsZero) {
  for (const auto& [id, g] : multigraphs_up_to(8)) {
    for (const NormalPartition& p : enumerate_nops(g, 100'000)) {
      const PartitionStats s = stats(p);
      EXPECT_EQ(s.balance, 0) << id;
      EXPECT_EQ(s.balance, oracle_balance(p));
      EXPECT_EQ(s.mu_numerator, 3u);
      EXPECT_EQ(s.mu_denominator, 1u);
      audit_partition(g, p, id);
    }
  }
}

TEST(Odd, NotOddThrows) {
  const CubicGraph g = generate("k4");
  SearchOptions options;
  options.require_odd = false;
  std::optional<NormalPartition> even;
  search_markings(g, 1, options, [&](const std::vector<NormalPartition>& ps) {
    if (is_odd(ps[0])) return true;
    even = ps[0];
    return false;
  });
  ASSERT_TRUE(even);
  try {
    associated_matching(*even);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotOdd);
  }
}

TEST(OddEdges, EvenPositions) {
  const Trail t = trail({0, 1, 2, 3, 4, 5}, {10, 11, 12, 13, 14});
  EXPECT_EQ(odd_edges(t), (std::vector<EdgeId>{11, 13}));
  EXPECT_TRUE(odd_edges(trail({0, 1}, {7})).empty());
}

TEST(Compatibility, IdenticalPartitionsAgreeEverywhere) {
  const CubicGraph g = generate("cube");
  const NormalPartition p = nop_from_matching(g);
  EXPECT_EQ(compatibility_set(p, p).size(), g.vertex_count());
  EXPECT_FALSE(are_compatible(p, p));
}

TEST(Compatibility, MatchesOracleOnAllPairs) {
  const CubicGraph g = generate("k33");
  const auto nops = enumerate_nops(g, 10'000);
  for (const auto& a : nops) {
    for (const auto& b : nops) EXPECT_EQ(are_compatible(a, b), oracle_compatible(g, a, b));
  }
}

TEST(Canonical, ReversalInvariant) {
  const CubicGraph g = generate("petersen");
  const NormalPartition p = nop_from_matching(g);
  std::vector<Trail> flipped;
  for (const Trail& t : p.trails()) flipped.insert(flipped.begin(), t.reversed());
  const NormalPartition q = make_partition(g, flipped);
  EXPECT_EQ(p.canonical_form(), q.canonical_form());
  EXPECT_EQ(p, q);
}

TEST(Relabel, IdentityRoundTrip) {
  const CubicGraph g = generate("prism");
  const NormalPartition p = nop_from_matching(g);
  std::vector<VertexId> vm(g.vertex_count());
  std::vector<EdgeId> em(g.edge_count());
  std::iota(vm.begin(), vm.end(), 0);
  std::iota(em.begin(), em.end(), 0);
  EXPECT_EQ(relabel(p, g, vm, em), p);
}

TEST(Roles, InternalAndEndPositions) {
  const CubicGraph g = generate("cube");
  const NormalPartition p = nop_from_matching(g);
  const VertexRoles r = vertex_roles(p);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Trail& in = p.trails()[r.internal_trail[v]];
    EXPECT_EQ(in.vertices[r.internal_pos[v]], v);
    const Trail& end = p.trails()[r.end_trail[v]];
    EXPECT_EQ(r.end_is_back[v] ? end.back() : end.front(), v);
  }
}
