#include <gtest/gtest.h>

#include "copnc/certificate.hpp"
#include "copnc/families.hpp"
#include "support.hpp"

using namespace copnc;
using namespace testing_support;

namespace {

// The boundary marks as (partition, vertex, neighbour) in u/v/w/t notation.
struct Mark {
  int part;
  const char* at;
  const char* to;
};

VertexId named(const FlowerNames& f, const std::string& s) {
  const int i = s.substr(1) == "k" ? f.k : std::stoi(s.substr(1));
  switch (s[0]) {
    case 'u': return f.u(i);
    case 'v': return f.v(i);
    case 'w': return f.w(i);
    default: return f.t(i);
  }
}

bool odd_in(const NormalPartition& p, EdgeId e) {
  for (const Trail& t : p.trails()) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      if (t.edges[i] == e) return i % 2 == 1;
    }
  }
  return false;
}

}  // namespace

TEST(Flower, BaseSatisfiesBoundaryMarksVerbatim) {
  const Mark marks[] = {
      {0, "u1", "v1"}, {0, "v1", "w1"}, {0, "w1", "w2"}, {0, "t1", "t2"}, {1, "u1", "uk"}, {1, "v1", "t1"},
      {1, "w1", "v1"}, {1, "t1", "wk"}, {2, "u1", "u2"}, {2, "v1", "u1"}, {2, "w1", "tk"}, {2, "t1", "v1"},
      {0, "u2", "u3"}, {0, "v2", "u2"}, {0, "w2", "v2"}, {0, "t2", "t1"}, {1, "u2", "v2"}, {1, "v2", "t2"},
      {1, "w2", "w3"}, {1, "t2", "t3"}, {2, "u2", "u1"}, {2, "v2", "w2"}, {2, "w2", "w1"}, {2, "t2", "v2"},
  };
  for (int k = 3; k <= 15; k += 2) {
    const CubicGraph g = flower(k);
    const FlowerNames f{k};
    const Triple t = flower_triple(k);
    for (const Mark& m : marks) {
      const VertexId at = named(f, m.at), to = named(f, m.to);
      EXPECT_EQ(t[m.part].marked_edge(at), *g.edge_between(at, to)) << "k=" << k << " T" << m.part + 1 << " " << m.at;
    }
    EXPECT_TRUE(odd_in(t[0], *g.edge_between(f.u(1), f.u(2))));
    EXPECT_TRUE(odd_in(t[1], *g.edge_between(f.t(1), f.t(2))));
    EXPECT_TRUE(odd_in(t[2], *g.edge_between(f.t(1), f.t(2))));
    EXPECT_TRUE(flower_boundary_violations(k, t).empty());
  }
}

TEST(Flower, ViolationsAreReported) {
  const Triple t = flower_triple(3);
  const Triple swapped = {t[1], t[0], t[2]};
  EXPECT_FALSE(flower_boundary_violations(3, swapped).empty());
}

TEST(Families, ValidateUpToFifteen) {
  for (int k = 3; k <= 15; k += 2) {
    EXPECT_TRUE(audit_triple(flower(k), flower_triple(k), "flower"));
    EXPECT_TRUE(audit_triple(goldberg(k), goldberg_triple(k), "goldberg"));
  }
  EXPECT_TRUE(audit_triple(generate("petersen"), petersen_triple(), "petersen"));
}

TEST(Families, LargerOddParameters) {
  EXPECT_TRUE(audit_triple(flower(21), flower_triple(21), "flower 21"));
  EXPECT_TRUE(audit_triple(goldberg(21), goldberg_triple(21), "goldberg 21"));
}

TEST(Families, BadParameter) {
  for (int k : {-1, 0, 1, 2, 4}) {
    EXPECT_THROW(flower_triple(k), Error);
    EXPECT_THROW(goldberg_triple(k), Error);
  }
}

TEST(Families, Deterministic) {
  EXPECT_EQ(certificate_json(flower(7), flower_triple(7)), certificate_json(flower(7), flower_triple(7)));
  EXPECT_EQ(certificate_json(goldberg(5), goldberg_triple(5)), certificate_json(goldberg(5), goldberg_triple(5)));
}

TEST(Families, RegenerationMatchesFrozenData) {
  const FamilyData fresh = derive_family_data();
  EXPECT_TRUE(fresh == frozen_family_data());
  EXPECT_EQ(family_data_source(fresh), family_data_source(frozen_family_data()));
}

TEST(Petersen, ProfileAndSymmetry) {
  const CubicGraph g = generate("petersen");
  const Triple t = petersen_triple();
  const auto autos = automorphisms(g);
  EXPECT_EQ(autos.size(), 120u);
  for (const auto& p : t) {
    std::vector<std::size_t> len;
    for (const Trail& tr : p.trails()) len.push_back(tr.edges.size());
    std::sort(len.begin(), len.end());
    EXPECT_EQ(len, (std::vector<std::size_t>{1, 3, 3, 3, 5}));
  }
  EXPECT_TRUE(isomorphic_partitions(g, t[0], t[1], autos));
  EXPECT_TRUE(isomorphic_partitions(g, t[1], t[2], autos));
}

TEST(Automorphisms, KnownGroupOrders) {
  EXPECT_EQ(automorphisms(generate("k4")).size(), 24u);
  EXPECT_EQ(automorphisms(generate("k33")).size(), 72u);
  EXPECT_EQ(automorphisms(generate("cube")).size(), 48u);
  EXPECT_EQ(automorphisms(generate("prism")).size(), 12u);
}

TEST(NeighborMarks, RoundTrip) {
  const CubicGraph g = goldberg(5);
  const Triple t = goldberg_triple(5);
  const Triple back = triple_from_neighbor_marks(g, neighbor_marks(g, t));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(back[i] == t[i]);
}
