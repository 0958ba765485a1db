#include "copnc/switching.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace copnc {

namespace {

std::atomic<std::size_t> g_conformal_ambiguity{0};

Trail prefix(const Trail& t, std::size_t pos) {
  Trail out;
  out.vertices.assign(t.vertices.begin(), t.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  out.edges.assign(t.edges.begin(), t.edges.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

Trail suffix(const Trail& t, std::size_t pos) {
  Trail out;
  out.vertices.assign(t.vertices.begin() + static_cast<std::ptrdiff_t>(pos), t.vertices.end());
  out.edges.assign(t.edges.begin() + static_cast<std::ptrdiff_t>(pos), t.edges.end());
  return out;
}

// a ends where b starts.
Trail concat(Trail a, const Trail& b) {
  a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  return a;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : key) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

NormalPartition switch_at(const CubicGraph& g, const NormalPartition& p, VertexId v, Branch branch) {
  const VertexRoles roles = vertex_roles(p);
  const std::size_t i = roles.internal_trail[v];
  const std::size_t r = roles.internal_pos[v];
  const std::size_t j = roles.end_trail[v];
  const Trail& ti = p.trails()[i];
  std::vector<Trail> trails = p.trails();

  if (i != j) {
    Trail xv, vy;
    if (branch == Branch::kFront) {
      xv = prefix(ti, r);
      vy = suffix(ti, r);
    } else {
      xv = suffix(ti, r).reversed();
      vy = prefix(ti, r).reversed();
    }
    Trail tj = p.trails()[j];
    if (roles.end_is_back[v]) tj = tj.reversed();
    trails[i] = concat(std::move(xv), tj);
    trails[j] = std::move(vy);
  } else {
    const VertexId named = branch == Branch::kFront ? ti.front() : ti.back();
    if (named == v) {
      throw Error(ErrorKind::kBadBranch,
                  "BadBranch: the chosen end of the trail through " + std::to_string(v) + " is v itself");
    }
    Trail t = ti;
    std::size_t pos = r;
    if (!roles.end_is_back[v]) {
      t = t.reversed();
      pos = t.length() - r;
    }
    std::reverse(t.edges.begin() + static_cast<std::ptrdiff_t>(pos), t.edges.end());
    std::reverse(t.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.vertices.end() - 1);
    trails[i] = std::move(t);
  }
  return make_partition(g, std::move(trails));
}

std::vector<NormalPartition> switches(const CubicGraph& g, const NormalPartition& p, VertexId v) {
  std::vector<NormalPartition> out;
  for (Branch b : {Branch::kFront, Branch::kBack}) {
    try {
      NormalPartition q = switch_at(g, p, v, b);
      if (q == p) continue;
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBadBranch) throw;
    }
  }
  return out;
}

std::vector<NormalPartition> odd_switches(const CubicGraph& g, const NormalPartition& p, VertexId v) {
  std::vector<NormalPartition> out = switches(g, p, v);
  std::erase_if(out, [](const NormalPartition& q) { return !is_odd(q); });
  return out;
}

std::optional<NormalPartition> conformal_switch(const CubicGraph& g, const NormalPartition& p,
                                                const PerfectMatching& m, VertexId v) {
  if (!is_conformal(p, m)) throw Error(ErrorKind::kNotConformal, "NotConformalInput");
  std::optional<NormalPartition> found;
  for (NormalPartition& q : switches(g, p, v)) {
    if (!is_conformal(q, m)) continue;
    if (found) {
      ++g_conformal_ambiguity;
      continue;
    }
    found = std::move(q);
  }
  return found;
}

std::size_t conformal_ambiguity_count() { return g_conformal_ambiguity.load(); }

namespace {

std::vector<NormalPartition> moves(const CubicGraph& g, const NormalPartition& p, MoveKind kind,
                                   const PerfectMatching* matching) {
  std::vector<NormalPartition> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    switch (kind) {
      case MoveKind::kPlain:
        for (auto& q : switches(g, p, v)) out.push_back(std::move(q));
        break;
      case MoveKind::kOdd:
        for (auto& q : odd_switches(g, p, v)) out.push_back(std::move(q));
        break;
      case MoveKind::kConformal:
        if (auto q = conformal_switch(g, p, *matching, v)) out.push_back(std::move(*q));
        break;
    }
  }
  return out;
}

void require_matching(MoveKind kind, const PerfectMatching* matching) {
  if (kind == MoveKind::kConformal && matching == nullptr) {
    throw Error(ErrorKind::kBadParameter, "conformal moves need a perfect matching");
  }
}

std::size_t graph_diameter(const std::vector<std::vector<std::size_t>>& adj) {
  std::size_t best = 0;
  std::vector<std::size_t> dist(adj.size());
  for (std::size_t s = 0; s < adj.size(); ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      best = std::max(best, dist[a]);
      for (std::size_t b : adj[a]) {
        if (dist[b] == SIZE_MAX) {
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
    }
  }
  return best;
}

}  // namespace

SwitchClass switch_class(const CubicGraph& g, const NormalPartition& start, MoveKind kind,
                         const PerfectMatching* matching, std::size_t cap) {
  require_matching(kind, matching);
  SwitchClass out;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index;
  std::vector<std::vector<std::size_t>> adj;
  out.members.push_back(start);
  index.emplace(start.canonical_form(), 0);
  adj.emplace_back();
  for (std::size_t at = 0; at < out.members.size(); ++at) {
    for (NormalPartition& q : moves(g, out.members[at], kind, matching)) {
      auto key = q.canonical_form();
      auto it = index.find(key);
      std::size_t id;
      if (it == index.end()) {
        if (out.members.size() >= cap) {
          throw Error(ErrorKind::kCapExceeded, "switch class exceeds cap of " + std::to_string(cap));
        }
        id = out.members.size();
        index.emplace(std::move(key), id);
        out.members.push_back(std::move(q));
        adj.emplace_back();
      } else {
        id = it->second;
      }
      adj[at].push_back(id);
    }
  }
  out.diameter = graph_diameter(adj);
  return out;
}

std::vector<std::size_t> switch_components(const CubicGraph& g,
                                           const std::vector<NormalPartition>& partitions,
                                           MoveKind kind, const PerfectMatching* matching,
                                           std::size_t* class_count) {
  require_matching(kind, matching);
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index;
  for (std::size_t i = 0; i < partitions.size(); ++i) index.emplace(partitions[i].canonical_form(), i);
  std::vector<std::size_t> parent(partitions.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (const NormalPartition& q : moves(g, partitions[i], kind, matching)) {
      auto it = index.find(q.canonical_form());
      if (it == index.end()) continue;
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> label(partitions.size());
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    auto [it, inserted] = ids.emplace(find(i), ids.size());
    label[i] = it->second;
  }
  if (class_count) *class_count = ids.size();
  return label;
}

}  // namespace copnc
