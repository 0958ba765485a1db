#include "copnc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "copnc/construct.hpp"

namespace copnc {

namespace {

std::vector<Slot> distinct_slots(const CubicGraph& g, VertexId v) {
  std::vector<Slot> out;
  for (Slot s : g.slots(v)) {
    if (g.is_loop(s.edge)) s.end = 0;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

// Union-find over the edges of one partition, with rollback. A component is a
// partial trail: `len` edges and `term` marked ends (2 once complete).
struct PartialTrails {
  std::vector<std::uint32_t> parent, size, len, term;

  explicit PartialTrails(std::size_t m) : parent(m), size(m, 1), len(m, 1), term(m, 0) {
    for (std::uint32_t i = 0; i < m; ++i) parent[i] = i;
  }
  std::uint32_t find(std::uint32_t x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

struct Undo {
  bool is_union;
  std::uint32_t part;
  std::uint32_t a, b;
};

class Engine {
 public:
  Engine(const CubicGraph& g, std::size_t k, const SearchOptions& options,
         const std::function<bool(const std::vector<NormalPartition>&)>& visit)
      : g_(g), k_(k), options_(options), visit_(visit), assigned_(g.vertex_count(), false) {
    for (std::size_t i = 0; i < k; ++i) {
      trails_.emplace_back(g.edge_count());
      marks_.emplace_back(g.vertex_count());
    }
    candidates_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (auto& tuple : covering_tuples(g, v, k)) {
        if (!options.allow || options.allow(v, tuple)) candidates_[v].push_back(std::move(tuple));
      }
    }
  }

  std::uint64_t run() {
    for (const auto& c : candidates_) {
      if (c.empty()) return 0;
    }
    recurse(0);
    return solutions_;
  }

 private:
  bool component_ok(std::size_t part, std::uint32_t edge) const {
    const PartialTrails& t = trails_[part];
    const std::uint32_t r = t.find(edge);
    if (options_.max_length && t.len[r] > *options_.max_length) return false;
    if (t.term[r] == 2 && options_.require_odd && t.len[r] % 2 == 0) return false;
    return true;
  }

  bool unite(std::size_t part, std::uint32_t a, std::uint32_t b) {
    PartialTrails& t = trails_[part];
    std::uint32_t ra = t.find(a), rb = t.find(b);
    if (ra == rb) return false;
    if (t.size[ra] < t.size[rb]) std::swap(ra, rb);
    t.parent[rb] = ra;
    t.size[ra] += t.size[rb];
    t.len[ra] += t.len[rb];
    t.term[ra] += t.term[rb];
    undo_.push_back({true, static_cast<std::uint32_t>(part), ra, rb});
    return true;
  }

  void add_terminal(std::size_t part, std::uint32_t e) {
    PartialTrails& t = trails_[part];
    const std::uint32_t r = t.find(e);
    ++t.term[r];
    undo_.push_back({false, static_cast<std::uint32_t>(part), r, 0});
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const Undo u = undo_.back();
      undo_.pop_back();
      PartialTrails& t = trails_[u.part];
      if (u.is_union) {
        t.parent[u.b] = u.b;
        t.size[u.a] -= t.size[u.b];
        t.len[u.a] -= t.len[u.b];
        t.term[u.a] -= t.term[u.b];
      } else {
        --t.term[u.a];
      }
    }
  }

  bool apply(VertexId v, const std::vector<Slot>& tuple) {
    if (options_.node_limit && ++nodes_ > *options_.node_limit) {
      throw Error(ErrorKind::kCapExceeded, "search node limit exceeded");
    }
    for (std::size_t p = 0; p < k_; ++p) {
      const Slot mark = tuple[p];
      std::array<Slot, 2> passage{};
      int i = 0;
      for (Slot s : g_.slots(v)) {
        if (s != mark) passage[i++] = s;
      }
      if (!unite(p, passage[0].edge, passage[1].edge)) return false;
      add_terminal(p, mark.edge);
      if (!component_ok(p, mark.edge) || !component_ok(p, passage[0].edge)) return false;
    }
    return true;
  }

  bool recurse(std::size_t depth) {
    if (depth == g_.vertex_count()) return leaf();
    VertexId best = 0;
    std::size_t best_count = SIZE_MAX;
    int best_degree = -1;
    std::vector<std::size_t> best_feasible, feasible;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (assigned_[v]) continue;
      feasible.clear();
      for (std::size_t c = 0; c < candidates_[v].size(); ++c) {
        const std::size_t mark = undo_.size();
        if (apply(v, candidates_[v][c])) feasible.push_back(c);
        rollback(mark);
      }
      int degree = 0;
      for (VertexId w : g_.neighbors(v)) degree += assigned_[w] ? 1 : 0;
      if (feasible.size() < best_count || (feasible.size() == best_count && degree > best_degree)) {
        best = v;
        best_count = feasible.size();
        best_degree = degree;
        best_feasible = feasible;
      }
      if (best_count == 0) return true;
    }
    assigned_[best] = true;
    for (std::size_t c : best_feasible) {
      const std::size_t mark = undo_.size();
      const auto& tuple = candidates_[best][c];
      apply(best, tuple);
      for (std::size_t p = 0; p < k_; ++p) marks_[p][best] = tuple[p];
      const bool go_on = recurse(depth + 1);
      rollback(mark);
      if (!go_on) {
        assigned_[best] = false;
        return false;
      }
    }
    assigned_[best] = false;
    return true;
  }

  bool leaf() {
    std::vector<NormalPartition> parts;
    parts.reserve(k_);
    for (std::size_t p = 0; p < k_; ++p) parts.push_back(trails_from_marking(g_, marks_[p]));
    ++solutions_;
    return visit_(parts);
  }

  const CubicGraph& g_;
  std::size_t k_;
  const SearchOptions& options_;
  const std::function<bool(const std::vector<NormalPartition>&)>& visit_;
  std::vector<std::vector<std::vector<Slot>>> candidates_;
  std::vector<PartialTrails> trails_;
  std::vector<Marking> marks_;
  std::vector<bool> assigned_;
  std::vector<Undo> undo_;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
};

std::vector<EdgeId> matched_edge_at(const CubicGraph& g, const PerfectMatching& m) {
  std::vector<EdgeId> out(g.vertex_count(), static_cast<EdgeId>(-1));
  for (EdgeId e : m) {
    out[g.endpoints(e).first] = e;
    out[g.endpoints(e).second] = e;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Slot>> covering_tuples(const CubicGraph& g, VertexId v, std::size_t partitions) {
  const std::vector<Slot> slots = distinct_slots(g, v);
  std::vector<std::vector<Slot>> out;
  if (partitions == 1) {
    for (Slot s : slots) out.push_back({s});
    return out;
  }
  if (slots.size() < 3) return out;
  std::vector<std::size_t> digits(partitions, 0);
  while (true) {
    std::array<bool, 3> seen{};
    for (std::size_t d : digits) seen[d] = true;
    if (seen[0] && seen[1] && seen[2]) {
      std::vector<Slot> tuple;
      for (std::size_t d : digits) tuple.push_back(slots[d]);
      out.push_back(std::move(tuple));
    }
    std::size_t i = partitions;
    while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::uint64_t search_markings(const CubicGraph& g, std::size_t partitions,
                              const SearchOptions& options,
                              const std::function<bool(const std::vector<NormalPartition>&)>& visit) {
  if (partitions == 0 || partitions == 2) {
    throw Error(ErrorKind::kBadParameter, "marking search needs 1 or at least 3 partitions");
  }
  Engine engine(g, partitions, options, visit);
  return engine.run();
}

std::optional<NormalPartition> find_nop(const CubicGraph& g) {
  auto m = first_perfect_matching(g);
  if (!m) return std::nullopt;
  return nop_from_matching(g, *m);
}

bool nop_exists_by_search(const CubicGraph& g) {
  bool found = false;
  search_markings(g, 1, {}, [&](const std::vector<NormalPartition>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<NormalPartition> enumerate_nops(const CubicGraph& g, std::size_t cap,
                                            const PerfectMatching* m) {
  SearchOptions options;
  std::vector<EdgeId> mate;
  if (m) {
    if (!is_perfect_matching(g, *m)) throw Error(ErrorKind::kBadParameter, "not a perfect matching");
    mate = matched_edge_at(g, *m);
    options.allow = [&](VertexId v, const std::vector<Slot>& t) { return t[0].edge != mate[v]; };
  }
  std::vector<NormalPartition> out;
  search_markings(g, 1, options, [&](const std::vector<NormalPartition>& parts) {
    if (out.size() >= cap) {
      throw Error(ErrorKind::kCapExceeded, "more than " + std::to_string(cap) + " normal odd partitions");
    }
    out.push_back(parts[0]);
    return true;
  });
  return out;
}

std::uint64_t for_each_compatible_triple(const CubicGraph& g, const TripleOptions& options,
                                         const std::function<bool(const Triple&)>& visit) {
  SearchOptions search;
  search.max_length = options.max_length;
  search.node_limit = options.node_limit;
  std::array<std::vector<EdgeId>, 3> mates;
  if (options.conformal) {
    for (int i = 0; i < 3; ++i) {
      if (!is_perfect_matching(g, (*options.conformal)[i])) {
        throw Error(ErrorKind::kBadParameter, "conformal target is not a perfect matching");
      }
      mates[i] = matched_edge_at(g, (*options.conformal)[i]);
    }
  }
  if (options.conformal || options.allow) {
    search.allow = [&](VertexId v, const std::vector<Slot>& t) {
      if (options.conformal) {
        for (int i = 0; i < 3; ++i) {
          if (t[i].edge == mates[i][v]) return false;
        }
      }
      return !options.allow || options.allow(v, {t[0], t[1], t[2]});
    };
  }
  std::uint64_t accepted = 0;
  search_markings(g, 3, search, [&](const std::vector<NormalPartition>& parts) {
    Triple t{parts[0], parts[1], parts[2]};
    if (options.accept && !options.accept(t)) return true;
    ++accepted;
    return visit(t);
  });
  return accepted;
}

std::optional<Triple> find_compatible_triple(const CubicGraph& g, const TripleOptions& options) {
  std::optional<Triple> found;
  for_each_compatible_triple(g, options, [&](const Triple& t) {
    found = t;
    return false;
  });
  return found;
}

std::array<PerfectMatching, 3> fan_raspaud_witness(const Triple& t) {
  std::array<PerfectMatching, 3> out{associated_matching(t[0]), associated_matching(t[1]),
                                     associated_matching(t[2])};
  for (EdgeId e : out[0]) {
    if (std::binary_search(out[1].begin(), out[1].end(), e) &&
        std::binary_search(out[2].begin(), out[2].end(), e)) {
      throw Error(ErrorKind::kInvariantViolation,
                  "EmptyIntersectionViolated(edge " + std::to_string(e) + ")");
    }
  }
  return out;
}

std::optional<std::vector<NormalPartition>> complete_system(const CubicGraph& g, std::size_t k,
                                                            std::uint64_t node_cap) {
  if (k < 3) throw Error(ErrorKind::kBadParameter, "a complete system has order at least 3");
  SearchOptions options;
  options.node_limit = node_cap;
  std::optional<std::vector<NormalPartition>> found;
  search_markings(g, k, options, [&](const std::vector<NormalPartition>& parts) {
    found = parts;
    return false;
  });
  return found;
}

const char* to_string(SweepCheck c) noexcept {
  switch (c) {
    case SweepCheck::kConj25: return "conj25";
    case SweepCheck::kThm12: return "thm12";
    case SweepCheck::kThm5: return "thm5";
  }
  return "?";
}

std::optional<SweepCheck> parse_sweep_check(std::string_view name) {
  if (name == "conj25") return SweepCheck::kConj25;
  if (name == "thm12") return SweepCheck::kThm12;
  if (name == "thm5") return SweepCheck::kThm5;
  return std::nullopt;
}

namespace {

void audit_triple(const CubicGraph& g, const Triple& t) {
  for (const auto& p : t) {
    if (!is_odd(p)) throw Error(ErrorKind::kInvariantViolation, "witness partition is not odd");
    if (stats(p).balance != 0) throw Error(ErrorKind::kInvariantViolation, "length balance is not zero");
  }
  if (!is_compatible_triple(t)) throw Error(ErrorKind::kInvariantViolation, "witness is not compatible");
  fan_raspaud_witness(t);
  edge_role_audit(g, t);
}

}  // namespace

SweepRecord sweep_one(const std::string& id, const CubicGraph& g, SweepCheck check) {
  SweepRecord r;
  r.id = id;
  r.n = g.vertex_count();
  const auto start = std::chrono::steady_clock::now();
  try {
    r.bridgeless = is_bridgeless(g);
    switch (check) {
      case SweepCheck::kConj25: {
        r.expected = r.bridgeless;
        r.witness = find_compatible_triple(g);
        r.found = r.witness.has_value();
        if (r.witness) audit_triple(g, *r.witness);
        r.counterexample = r.bridgeless && !r.found;
        r.agrees = r.found == r.bridgeless;
        break;
      }
      case SweepCheck::kThm12: {
        r.expected = is_bipartite(g);
        TripleOptions options;
        options.max_length = 3;
        r.witness = find_compatible_triple(g, options);
        r.found = r.witness.has_value();
        if (r.witness) audit_triple(g, *r.witness);
        r.agrees = r.found == r.expected;
        break;
      }
      case SweepCheck::kThm5: {
        r.expected = first_perfect_matching(g).has_value();
        r.found = nop_exists_by_search(g);
        const bool constructed = find_nop(g).has_value();
        r.agrees = r.found == r.expected && constructed == r.expected;
        break;
      }
    }
    r.graph = g;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.agrees = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRecord> conjecture_sweep(const std::vector<SweepInput>& inputs, SweepCheck check,
                                          unsigned jobs,
                                          const std::function<void(const SweepRecord&)>& on_record) {
  std::vector<SweepRecord> out(inputs.size());
  std::atomic<std::size_t> next{0};
  std::mutex report;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= inputs.size()) return;
      SweepRecord r;
      try {
        const CubicGraph g = inputs[i].graph6 ? parse_graph6(inputs[i].text) : parse_edge_list(inputs[i].text);
        r = sweep_one(inputs[i].id, g, check);
      } catch (const std::exception& e) {
        r.id = inputs[i].id;
        r.error = e.what();
        r.agrees = false;
      }
      if (on_record) {
        std::lock_guard lock(report);
        on_record(r);
      }
      out[i] = std::move(r);
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<SweepInput> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  const std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  const bool g6 = p.extension() == ".g6";
  std::vector<SweepInput> out;
  std::string line, block;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n") != std::string::npos) {
      out.push_back({stem + "#" + std::to_string(out.size()), block, false});
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (g6) {
      if (line.empty()) continue;
      out.push_back({stem + "#" + std::to_string(out.size()), line, true});
    } else if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  if (!g6) flush();
  return out;
}

}  // namespace copnc
