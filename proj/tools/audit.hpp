#pragma once

#include <cstdint>
#include <ostream>

namespace tenspect::cli {

struct AuditOutcome {
  int invariants = 0;
  int invariant_failures = 0;
  int audit_items = 0;
  int audit_warnings = 0;
};

/// Runs the seeded claims suite and writes the pass/fail table. Invariant
/// rows gate the exit code; audit rows describe paper claims checked
/// empirically and only ever warn.
AuditOutcome run_audit(std::uint64_t seed, std::ostream& out);

}  // namespace tenspect::cli
