#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "copnc/certificate.hpp"
#include "copnc/construct.hpp"
#include "copnc/families.hpp"
#include "copnc/search.hpp"
#include "copnc/switching.hpp"
#include "json.hpp"

using namespace copnc;
using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kPrecondition:
      return 3;
    case ErrorKind::kCapExceeded:
    case ErrorKind::kSearchExhausted:
      return 4;
    case ErrorKind::kIo:
      return 5;
    default:
      return 2;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << text << '\n';
}

PerfectMatching parse_matching(const CubicGraph& g, const std::string& ids) {
  PerfectMatching m;
  std::stringstream ss(ids);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      m.push_back(static_cast<EdgeId>(std::stoul(item)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kBadParameter, "bad edge id '" + item + "' in --matching");
    }
  }
  std::sort(m.begin(), m.end());
  if (!is_perfect_matching(g, m)) throw Error(ErrorKind::kBadParameter, "--matching is not a perfect matching");
  return m;
}

MoveKind parse_moves(const std::string& s) {
  if (s == "plain") return MoveKind::kPlain;
  if (s == "odd") return MoveKind::kOdd;
  return MoveKind::kConformal;
}

struct FamilySpec {
  std::string name;
  int k = 0;
};

FamilySpec parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  FamilySpec f{spec.substr(0, colon), 0};
  if (colon != std::string::npos) {
    try {
      f.k = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kBadParameter, "bad family parameter in " + spec);
    }
  }
  if (f.name != "petersen" && f.name != "flower" && f.name != "goldberg") {
    throw Error(ErrorKind::kBadParameter, "unknown family " + f.name);
  }
  return f;
}

std::pair<CubicGraph, Triple> family_triple(const FamilySpec& f, const FamilyData& data) {
  if (f.name == "petersen") return {generate("petersen"), petersen_triple()};
  if (f.name == "flower") return {flower(f.k), flower_triple(f.k, data)};
  return {goldberg(f.k), goldberg_triple(f.k, data)};
}

int cmd_validate(const std::string& graph_spec, const std::string& cert_path) {
  const Certificate c = parse_certificate(read_file(cert_path));
  std::optional<CubicGraph> expected;
  if (!graph_spec.empty()) expected = resolve_graph(graph_spec);
  const CertificateReport report = check_certificate(c, expected ? &*expected : nullptr);
  std::cout << report.json << '\n';
  return report.ok ? 0 : 2;
}

int cmd_construct(const std::string& method, const std::string& graph_spec, std::uint64_t seed,
                  const std::string& out) {
  const CubicGraph g = resolve_graph(graph_spec);
  if (method == "matching") {
    const NormalPartition p = nop_from_matching(g);
    write_output(out, certificate_json(g, std::span<const NormalPartition>(&p, 1)));
    return 0;
  }
  ConformalOptions options;
  options.seed = seed;
  const ConformalTriple t = method == "bipartite" ? bipartite_triple(g) : conformal_triple_general(g, options);
  write_output(out, certificate_json(g, t.partitions));
  return 0;
}

int cmd_family(const std::string& spec, bool emit_partitions, bool regenerate, bool dump_source,
               const std::string& out) {
  if (regenerate) {
    const FamilyData fresh = derive_family_data();
    if (dump_source) std::cout << family_data_source(fresh);
    const FamilyData& frozen = frozen_family_data();
    bool same = fresh == frozen;
    for (int k = 3; same && k <= 15; k += 2) {
      same = certificate_json(flower(k), flower_triple(k, fresh)) ==
                 certificate_json(flower(k), flower_triple(k, frozen)) &&
             certificate_json(goldberg(k), goldberg_triple(k, fresh)) ==
                 certificate_json(goldberg(k), goldberg_triple(k, frozen));
    }
    std::cerr << (same ? "regenerated family data matches the frozen data\n"
                       : "regenerated family data DRIFTED from the frozen data\n");
    return same ? 0 : 2;
  }
  if (spec.empty()) throw Error(ErrorKind::kBadParameter, "family name required");
  const auto [g, t] = family_triple(parse_family(spec), frozen_family_data());
  if (emit_partitions) {
    json doc = json::parse(certificate_json(g, t));
    write_output(out, doc["partitions"].dump(2));
  } else {
    write_output(out, certificate_json(g, t));
  }
  return 0;
}

std::vector<NormalPartition> all_partitions(const CubicGraph& g, MoveKind kind, const PerfectMatching* m,
                                            std::size_t cap) {
  if (kind != MoveKind::kPlain) return enumerate_nops(g, cap, kind == MoveKind::kConformal ? m : nullptr);
  std::vector<NormalPartition> out;
  SearchOptions options;
  options.require_odd = false;
  search_markings(g, 1, options, [&](const std::vector<NormalPartition>& ps) {
    if (out.size() >= cap) throw Error(ErrorKind::kCapExceeded, "CapExceeded: more than " + std::to_string(cap) + " partitions");
    out.push_back(ps[0]);
    return true;
  });
  return out;
}

int cmd_switch_class(const std::string& graph_spec, const std::string& moves, const std::string& matching,
                     std::size_t cap, const std::string& out) {
  const CubicGraph g = resolve_graph(graph_spec);
  const MoveKind kind = parse_moves(moves);
  std::optional<PerfectMatching> m;
  if (!matching.empty()) {
    m = parse_matching(g, matching);
  } else if (kind == MoveKind::kConformal) {
    m = first_perfect_matching(g);
    if (!m) throw Error(ErrorKind::kPrecondition, "NoMatching");
  }
  const auto parts = all_partitions(g, kind, m ? &*m : nullptr, cap);
  std::size_t count = 0;
  const auto label = switch_components(g, parts, kind, m ? &*m : nullptr, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (std::size_t l : label) ++sizes[l];
  json doc = {{"schema", kSchema}, {"moves", moves}, {"n", g.vertex_count()},
              {"partitions", parts.size()}, {"classes", count}, {"sizes", sizes}};
  if (m) doc["matching"] = *m;
  write_output(out, doc.dump(2));
  return 0;
}

int cmd_sweep(const std::string& input, const std::string& check_name, unsigned jobs, const std::string& out) {
  const auto check = parse_sweep_check(check_name);
  if (!check) throw Error(ErrorKind::kBadParameter, "unknown check " + check_name);
  const auto inputs = read_corpus(input);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out, std::ios::binary);
    if (!file) throw Error(ErrorKind::kIo, "cannot write " + out);
    os = &file;
  }
  std::size_t disagree = 0, counterexamples = 0, errors = 0;
  conjecture_sweep(inputs, *check, jobs, [&](const SweepRecord& r) {
    *os << sweep_record_json(r, *check) << '\n';
    os->flush();
    disagree += !r.agrees;
    counterexamples += r.counterexample;
    errors += !r.error.empty();
  });
  std::cerr << "sweep " << to_string(*check) << ": " << inputs.size() << " graphs, " << disagree
            << " disagreements, " << counterexamples << " counterexamples, " << errors << " errors\n";
  return disagree || counterexamples || errors ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible normal odd partitions of cubic graphs"};
  app.require_subcommand(1);

  std::string graph, cert, method = "conformal", out, family, moves = "conformal", matching, input,
                             check = "conj25";
  std::uint64_t seed = 0;
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
  bool emit_partitions = false, regenerate = false, dump_source = false;

  auto* validate = app.add_subcommand("validate", "Validate a certificate");
  validate->add_option("--graph", graph, "Graph the certificate must describe");
  validate->add_option("certificate,--cert", cert, "Certificate JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Construct partitions and print a certificate");
  construct->add_option("--method", method)->check(CLI::IsMember({"matching", "bipartite", "conformal"}));
  construct->add_option("--graph", graph)->required();
  construct->add_option("--seed", seed);
  construct->add_option("--out", out);

  auto* fam = app.add_subcommand("family", "Snark family triples");
  fam->add_option("name", family, "petersen, flower:k or goldberg:k");
  fam->add_flag("--emit-partitions", emit_partitions, "Print only the partitions array");
  fam->add_flag("--regenerate", regenerate, "Re-derive the frozen data and compare");
  fam->add_flag("--dump-source", dump_source, "With --regenerate, print the derived data as C++");
  fam->add_option("--out", out);

  auto* sc = app.add_subcommand("switch-class", "Count switching classes");
  sc->add_option("--graph", graph)->required();
  sc->add_option("--moves", moves)->check(CLI::IsMember({"plain", "odd", "conformal"}));
  sc->add_option("--matching", matching, "Comma-separated edge ids");
  sc->add_option("--cap", cap);
  sc->add_option("--out", out);

  auto* sweep = app.add_subcommand("sweep", "Check a corpus file");
  sweep->add_option("--input", input)->required();
  sweep->add_option("--check", check)->check(CLI::IsMember({"conj25", "thm12", "thm5"}));
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(graph, cert);
    if (*construct) return cmd_construct(method, graph, seed, out);
    if (*fam) return cmd_family(family, emit_partitions, regenerate, dump_source, out);
    if (*sc) return cmd_switch_class(graph, moves, matching, cap, out);
    if (*sweep) return cmd_sweep(input, check, jobs, out);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
