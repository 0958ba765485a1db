#include "copnc/certificate.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace copnc {

using nlohmann::json;

namespace {

json graph_json(const CubicGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json partition_json(const NormalPartition& p) {
  json trails = json::array();
  for (const Trail& t : p.trails()) trails.push_back({{"vertices", t.vertices}, {"edges", t.edges}});
  return trails;
}

json certificate_object(const CubicGraph& g, std::span<const NormalPartition> partitions) {
  json parts = json::array();
  for (const auto& p : partitions) parts.push_back(partition_json(p));
  return {{"schema", kSchema}, {"graph", graph_json(g)}, {"partitions", std::move(parts)}};
}

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kMalformed, "certificate " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) malformed(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

template <class T>
std::vector<T> id_array(const json& a, const std::string& where) {
  if (!a.is_array()) malformed(where, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number_unsigned()) malformed(where + "/" + std::to_string(i), "expected a non-negative integer");
    out.push_back(a[i].get<T>());
  }
  return out;
}

}  // namespace

std::string certificate_json(const CubicGraph& g, std::span<const NormalPartition> partitions) {
  return certificate_object(g, partitions).dump(2);
}

std::string certificate_json(const CubicGraph& g, const Triple& t) {
  return certificate_json(g, std::span<const NormalPartition>(t.data(), t.size()));
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kMalformed, std::string("certificate at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (doc.contains("schema") && doc["schema"] != kSchema) malformed("/schema", "unsupported schema");
  const json& graph = field(doc, "graph", "");
  const json& n = field(graph, "n", "/graph");
  if (!n.is_number_unsigned()) malformed("/graph/n", "expected a non-negative integer");
  const json& edges = field(graph, "edges", "/graph");
  if (!edges.is_array()) malformed("/graph/edges", "expected an array");
  std::vector<CubicGraph::Endpoints> ends;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/graph/edges/" + std::to_string(i);
    auto pair = id_array<VertexId>(edges[i], where);
    if (pair.size() != 2) malformed(where, "expected [u, v]");
    ends.emplace_back(pair[0], pair[1]);
  }
  Certificate c;
  c.graph = CubicGraph::build(n.get<std::size_t>(), ends);
  const json& parts = field(doc, "partitions", "");
  if (!parts.is_array()) malformed("/partitions", "expected an array");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string where = "/partitions/" + std::to_string(i);
    if (!parts[i].is_array()) malformed(where, "expected an array of trails");
    std::vector<Trail> trails;
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      const std::string tw = where + "/" + std::to_string(j);
      Trail t;
      t.vertices = id_array<VertexId>(field(parts[i][j], "vertices", tw), tw + "/vertices");
      t.edges = id_array<EdgeId>(field(parts[i][j], "edges", tw), tw + "/edges");
      trails.push_back(std::move(t));
    }
    c.partitions.push_back(std::move(trails));
  }
  return c;
}

CertificateReport check_certificate(const Certificate& c, const CubicGraph* expected) {
  CertificateReport report;
  json out = {{"schema", kSchema}};
  if (expected) {
    const bool same = *expected == c.graph;
    out["graph_matches"] = same;
    report.ok = report.ok && same;
  }
  json parts = json::array();
  std::vector<std::optional<NormalPartition>> valid;
  for (std::size_t i = 0; i < c.partitions.size(); ++i) {
    Validation v = validate_normal(c.graph, c.partitions[i]);
    json entry = {{"index", i}, {"ok", v.ok()}};
    if (!v.ok()) {
      entry["error"] = "NotAPartition";
      json diags = json::array();
      for (const Diagnostic& d : v.diagnostics) {
        diags.push_back({{"kind", to_string(d.kind)}, {"subject", d.subject}, {"count", d.count},
                         {"message", d.message}});
      }
      entry["diagnostics"] = std::move(diags);
      report.ok = false;
    } else {
      entry["odd"] = is_odd(*v.partition);
      report.partitions.push_back(*v.partition);
    }
    valid.push_back(std::move(v.partition));
    parts.push_back(std::move(entry));
  }
  out["partitions"] = std::move(parts);
  json pairs = json::array();
  if (valid.size() >= 2) {
    for (std::size_t i = 0; i < valid.size(); ++i) {
      for (std::size_t j = i + 1; j < valid.size(); ++j) {
        if (!valid[i] || !valid[j]) continue;
        const auto agree = compatibility_set(*valid[i], *valid[j]);
        json pair = {{"a", i}, {"b", j}, {"compatible", agree.empty()}};
        if (!agree.empty()) {
          pair["agreement"] = agree;
          pair["identical"] = agree.size() == c.graph.vertex_count();
          report.ok = false;
        }
        pairs.push_back(std::move(pair));
      }
    }
  }
  out["pairs"] = std::move(pairs);
  out["ok"] = report.ok;
  report.json = out.dump(2);
  return report;
}

std::string sweep_record_json(const SweepRecord& r, SweepCheck check) {
  json j = {{"schema", kSchema},
            {"id", r.id},
            {"check", to_string(check)},
            {"n", r.n},
            {"bridgeless", r.bridgeless},
            {"found", r.found},
            {"expected", r.expected},
            {"agrees", r.agrees},
            {"counterexample", r.counterexample},
            {"seconds", r.seconds}};
  if (!r.error.empty()) j["error"] = r.error;
  if (r.witness && r.graph) {
    j["witness"] = certificate_object(*r.graph, std::span<const NormalPartition>(r.witness->data(), 3));
  } else if (r.graph && r.error.empty() && check != SweepCheck::kThm5) {
    // Exhausted: the search covered every marking with no cap.
    j["exhausted"] = {{"graph", graph_json(*r.graph)},
                      {"partitions", 3},
                      {"require_odd", true},
                      {"max_length", check == SweepCheck::kThm12 ? json(3) : json(nullptr)},
                      {"node_limit", nullptr}};
  }
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CubicGraph resolve_graph(std::string_view spec) {
  if (spec.empty()) throw Error(ErrorKind::kBadParameter, "empty graph spec");
  if (spec.front() == '@') {
    const std::string path(spec.substr(1));
    const std::string text = read_file(path);
    if (path.size() >= 3 && path.ends_with(".g6")) {
      const auto nl = text.find('\n');
      return parse_graph6(std::string_view(text).substr(0, nl));
    }
    return parse_edge_list(text);
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return generate(spec);
  int k = 0;
  try {
    k = std::stoi(std::string(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::kBadParameter, "bad parameter in graph spec " + std::string(spec));
  }
  return generate(spec.substr(0, colon), k);
}

}  // namespace copnc
