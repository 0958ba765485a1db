// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "copnc/certificate.hpp"
#include "copnc/construct.hpp"
#include "copnc/families.hpp"
#include "copnc/switching.hpp"
#include "support.hpp"

using namespace copnc;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<CorpusGraph> all_up_to_12() {
  auto out = multigraphs_up_to(10);
  for (auto& g : corpus("cubic_loopless_n12.txt")) out.push_back(std::move(g));
  return out;
}

Outcome c1_matching_iff_partition() {
  std::size_t checked = 0, bad = 0;
  for (const auto& [id, g] : multigraphs_up_to(10)) {
    const bool has_pm = !perfect_matchings(g).empty();
    const auto p = find_nop(g);
    if (p) audit_partition(g, *p, id);
    if (p.has_value() != has_pm || nop_exists_by_search(g) != has_pm || (p && !oracle_is_odd(*p))) ++bad;
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) + " disagreements"};
}

Outcome c2_length3_iff_bipartite() {
  std::size_t checked = 0, bad = 0, bipartite = 0;
  TripleOptions options;
  options.max_length = 3;
  for (const auto& [id, g] : simple_graphs({4, 6, 8, 10})) {
    const auto t = find_compatible_triple(g, options);
    if (t && !audit_triple(g, *t, id)) ++bad;
    if (t.has_value() != is_bipartite(g)) ++bad;
    if (is_bipartite(g)) {
      ++bipartite;
      const ConformalTriple bt = bipartite_triple(g);
      bool all3 = true;
      for (const auto& p : bt.partitions) {
        for (const Trail& tr : p.trails()) all3 = all3 && tr.edges.size() == 3;
      }
      if (check_conformal_triple(g, bt) || !audit_triple(g, bt.partitions, id) || !all3) ++bad;
    }
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " graphs (" + std::to_string(bipartite) + " bipartite), " +
                        std::to_string(bad) + " failures"};
}

Outcome c3_k4() {
  const CubicGraph g = generate("k4");
  const auto start = std::chrono::steady_clock::now();
  const bool found = find_compatible_triple(g).has_value();
  std::size_t solutions = 0, short_ones = 0;
  for_each_compatible_triple(g, {}, [&](const Triple& t) {
    ++solutions;
    audit_triple(g, t, "k4");
    std::size_t longest = 0;
    for (const auto& p : t) {
      for (const Trail& tr : p.trails()) longest = std::max(longest, tr.edges.size());
    }
    if (longest < 5) ++short_ones;
    return true;
  });
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {found && solutions > 0 && short_ones == 0 && s < 1.0,
          std::to_string(solutions) + " triples, " + std::to_string(short_ones) + " without a trail of length >= 5, " +
              std::to_string(s) + " s"};
}

bool petersen_profile(const NormalPartition& p) {
  std::vector<std::size_t> len;
  for (const Trail& t : p.trails()) len.push_back(t.edges.size());
  std::sort(len.begin(), len.end());
  return len == std::vector<std::size_t>{1, 3, 3, 3, 5};
}

Outcome c4_petersen() {
  const CubicGraph g = generate("petersen");
  TripleOptions options;
  options.max_length = 5;
  options.accept = [](const Triple& t) { return std::all_of(t.begin(), t.end(), petersen_profile); };
  const auto searched = find_compatible_triple(g, options);
  const Triple t = petersen_triple();
  const bool ok = searched && audit_triple(g, *searched, "petersen search") && audit_triple(g, t, "petersen") &&
                  std::all_of(t.begin(), t.end(), petersen_profile);
  return {ok, std::string("search ") + (searched ? "found" : "missed") + " a {5,3,3,3,1} triple"};
}

Outcome c5_theta() {
  const CubicGraph g = generate("theta");
  std::string detail;
  bool ok = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const PerfectMatching m{e};
    const auto parts = enumerate_nops(g, 1000, &m);
    for (const auto& p : parts) audit_partition(g, p, "theta");
    std::size_t classes = 0;
    switch_components(g, parts, MoveKind::kConformal, &m, &classes);
    ok = ok && classes == 2;
    detail += "edge " + std::to_string(e) + ": " + std::to_string(parts.size()) + " partitions, " +
              std::to_string(classes) + " classes; ";
  }
  return {ok, detail};
}

Outcome c6_conformal_connected() {
  std::size_t pairs = 0, bad = 0;
  for (const auto& [id, g] : simple_graphs({4, 6, 8})) {
    for (const PerfectMatching& m : perfect_matchings(g)) {
      const auto parts = enumerate_nops(g, 1'000'000, &m);
      std::size_t classes = 0;
      switch_components(g, parts, MoveKind::kConformal, &m, &classes);
      for (const auto& p : parts) {
        if (oracle_matching(p) != std::set<EdgeId>(m.begin(), m.end())) ++bad;
      }
      if (classes != 1) ++bad;
      ++pairs;
    }
  }
  return {bad == 0, std::to_string(pairs) + " (graph, matching) pairs, " + std::to_string(bad) + " failures"};
}

Outcome c7_odd_connected() {
  std::size_t graphs = 0, bad = 0, total = 0;
  for (const auto& [id, g] : multigraphs_up_to(6)) {
    const auto parts = enumerate_nops(g, 1'000'000);
    std::size_t classes = 0;
    switch_components(g, parts, MoveKind::kOdd, nullptr, &classes);
    total += parts.size();
    if (classes > 1) ++bad;
    ++graphs;
  }
  return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(total) + " partitions, " +
                        std::to_string(bad) + " disconnected"};
}

Outcome c8_general_conformal() {
  std::size_t colorable = 0, bad = 0, digons = 0, triangles = 0;
  std::string first_failure;
  for (const auto& [id, g] : all_up_to_12()) {
    if (g.has_loop() || !proper_3_edge_coloring(g)) continue;
    ++colorable;
    try {
      GeneralTelemetry tel;
      const ConformalTriple t = conformal_triple_general(g, {}, &tel);
      digons += tel.digons;
      triangles += tel.triangles;
      bool conformal = !check_conformal_triple(g, t).has_value();
      for (int c = 0; c < 3; ++c) {
        std::set<EdgeId> cls;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (t.coloring[e] == static_cast<Color>(c)) cls.insert(e);
        }
        conformal = conformal && oracle_matching(t.partitions[c]) == cls;
      }
      if (!conformal || !audit_triple(g, t.partitions, id)) {
        ++bad;
        if (first_failure.empty()) first_failure = id;
      }
    } catch (const Error& e) {
      ++bad;
      if (first_failure.empty()) first_failure = id + " (" + e.what() + ")";
    }
  }
  std::string detail = std::to_string(colorable) + " colourable graphs, " + std::to_string(digons) +
                       " digon and " + std::to_string(triangles) + " triangle reductions, " + std::to_string(bad) +
                       " failures";
  if (!first_failure.empty()) detail += "; first: " + first_failure;
  return {bad == 0 && digons > 0 && triangles > 0, detail};
}

Outcome c10_bridges_and_audits() {
  std::size_t bridged = 0, bad = 0;
  for (const auto& [id, g] : all_up_to_12()) {
    if (is_bridgeless(g)) continue;
    ++bridged;
    if (find_compatible_triple(g)) ++bad;
  }
  const AuditLog& log = audit_log();
  const bool ok = bad == 0 && log.balance_violations == 0 && log.role_violations == 0 && log.triples > 0;
  return {ok, std::to_string(bridged) + " bridged graphs (" + std::to_string(bad) + " with a triple), " +
                  std::to_string(log.partitions) + " partitions and " + std::to_string(log.triples) +
                  " triples audited, " + std::to_string(log.balance_violations + log.role_violations) +
                  " audit violations"};
}

Outcome c11_families() {
  std::size_t bad = 0;
  for (int k = 3; k <= 15; k += 2) {
    if (!audit_triple(flower(k), flower_triple(k), "flower:" + std::to_string(k))) ++bad;
    if (!audit_triple(goldberg(k), goldberg_triple(k), "goldberg:" + std::to_string(k))) ++bad;
  }
  const auto boundary = flower_boundary_violations(3, flower_triple(3));
  const FamilyData fresh = derive_family_data();
  bool identical = fresh == frozen_family_data() &&
                   certificate_json(generate("petersen"), petersen_triple()) ==
                       certificate_json(generate("petersen"),
                                        triple_from_neighbor_marks(generate("petersen"), fresh.petersen));
  for (int k = 3; k <= 15; k += 2) {
    identical = identical &&
                certificate_json(flower(k), flower_triple(k, fresh)) == certificate_json(flower(k), flower_triple(k)) &&
                certificate_json(goldberg(k), goldberg_triple(k, fresh)) ==
                    certificate_json(goldberg(k), goldberg_triple(k));
  }
  return {bad == 0 && boundary.empty() && identical,
          std::to_string(bad) + " invalid family triples, " + std::to_string(boundary.size()) +
              " boundary violations, regeneration " + (identical ? "identical" : "DRIFTED")};
}

Outcome c12_sweep() {
  std::vector<SweepInput> inputs;
  for (const char* f : {"cubic_n02.txt", "cubic_n04.txt", "cubic_n06.txt", "cubic_n08.txt", "cubic_n10.txt",
                        "cubic_loopless_n12.txt"}) {
    for (auto& in : read_corpus(corpus_path(f))) inputs.push_back(std::move(in));
  }
  std::size_t bridgeless = 0, counterexamples = 0, disagree = 0;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  for (const SweepRecord& r : conjecture_sweep(inputs, SweepCheck::kConj25, jobs)) {
    bridgeless += r.bridgeless;
    counterexamples += r.counterexample;
    disagree += !r.agrees;
    if (r.witness && r.graph) audit_triple(*r.graph, *r.witness, r.id);
  }
  return {counterexamples == 0 && disagree == 0,
          std::to_string(inputs.size()) + " graphs, " + std::to_string(bridgeless) + " bridgeless, " +
              std::to_string(counterexamples) + " counterexamples"};
}

Outcome c9_matching_intersection() {
  const AuditLog& log = audit_log();
  return {log.matching_violations == 0 && log.triples > 0,
          std::to_string(log.triples) + " triples, " + std::to_string(log.matching_violations) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  // Criteria 9 and 10 summarise the audits of every triple produced before them.
  const std::vector<Criterion> criteria = {
      {1, "partition exists iff perfect matching (n <= 10)", 300, c1_matching_iff_partition},
      {2, "length-3 triple iff bipartite (simple n <= 10)", 600, c2_length3_iff_bipartite},
      {3, "K4 needs a trail of length >= 5", 1, c3_k4},
      {4, "Petersen {5,3,3,3,1} triple", 30, c4_petersen},
      {5, "theta: two conformal classes", 1, c5_theta},
      {6, "conformal classes connected (simple n = 4, 6, 8)", 600, c6_conformal_connected},
      {7, "odd classes connected (n <= 6)", 600, c7_odd_connected},
      {8, "conformal triples on colourable graphs (n <= 12)", 1800, c8_general_conformal},
      {11, "Flower and Goldberg families (k <= 15)", 300, c11_families},
      {12, "compatible triple sweep (n <= 12)", 7200, c12_sweep},
      {9, "associated matchings never share an edge", 0, c9_matching_intersection},
      {10, "balance, edge roles, bridged graphs", 0, c10_bridges_and_audits},
  };
  std::vector<std::string> lines(13);
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && s > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    failed += !o.pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.2f s]", s);
    lines[c.id] = "criterion " + std::to_string(c.id) + ": " + (o.pass ? "PASS" : "FAIL") + " - " + c.name +
                  ": " + o.detail + buf;
  }
  for (int i = 1; i <= 12; ++i) std::printf("%s\n", lines[i].c_str());
  const AuditLog& log = audit_log();
  for (std::size_t i = 0; i < std::min<std::size_t>(log.messages.size(), 10); ++i) {
    std::printf("  audit: %s\n", log.messages[i].c_str());
  }
  return failed == 0 ? 0 : 1;
}
