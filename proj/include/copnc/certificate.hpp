#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copnc/partition.hpp"
#include "copnc/search.hpp"

namespace copnc {

inline constexpr const char* kSchema = "copnc/1";

/// A certificate as read from disk: a graph and raw, unvalidated trails.
struct Certificate {
  CubicGraph graph;
  std::vector<std::vector<Trail>> partitions;
};

/// {"schema","graph":{"n","edges"},"partitions":[[{"vertices","edges"},...],...]}
std::string certificate_json(const CubicGraph& g, std::span<const NormalPartition> partitions);
std::string certificate_json(const CubicGraph& g, const Triple& t);

/// Error(kMalformed) with the byte offset or JSON pointer of the problem.
Certificate parse_certificate(std::string_view text);

struct CertificateReport {
  bool ok = true;
  std::vector<NormalPartition> partitions;  // those that validated
  std::string json;                         // machine-readable diagnostics
};

/// Validates every partition and, for two or more, pairwise compatibility.
/// With `expected` set, the certificate graph must match it edge for edge.
CertificateReport check_certificate(const Certificate& c, const CubicGraph* expected = nullptr);

/// One JSONL line (no trailing newline).
std::string sweep_record_json(const SweepRecord& r, SweepCheck check);

/// "name", "name:k", "@file.g6" or "@file.edges" (any other extension reads
/// an edge list). Error(kIo) for unreadable files.
CubicGraph resolve_graph(std::string_view spec);

std::string read_file(const std::string& path);

}  // namespace copnc
