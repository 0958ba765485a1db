#pragma once

#include <stdexcept>
#include <string>

namespace copnc {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kMalformed,        // unparseable input
  kNonCubic,         // a vertex does not have degree 3
  kBadParameter,     // generator or option out of range
  kNotAPartition,    // trails do not form a normal partition
  kCycle,            // a marking closes an internally paired cycle
  kNotOdd,
  kNotConformal,
  kBadBranch,
  kPrecondition,     // NotBipartite, NotThreeEdgeColorable, ...
  kCapExceeded,
  kSearchExhausted,
  kInvariantViolation,  // a proven property failed: implementation bug
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace copnc
