#pragma once

#include <stdexcept>
#include <string>

namespace omega4 {

/// Coarse failure categories; the CLI maps each to a process exit code.
enum class ErrKind {
  Parse,            // malformed input file or bad command arguments
  Validation,       // structurally invalid object (bad vertex, mismatched dims, ...)
  NotAdmissible,    // ideal did not stabilize below the length cap
  Degenerate,       // quotient killed a vertex idempotent
  CapExceeded,      // enumeration/resource bound hit
  PeriodHypothesis, // a simple module's period does not divide 4
  NotSymmetric,     // no symmetrizing form found where one is required
  NotConnected,     // quiver not connected where connectivity is required
  MathCheckFailed,  // a verified mathematical claim evaluated to false
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

}  // namespace omega4
