#pragma once

#include <string>

#include "lsl/io.hpp"

namespace lsl {

// JSON report, human-readable text and pass/fail for one command.
struct CheckResult {
  Json report;
  std::string text;
  bool ok = false;
};

CheckResult validate_check(const Instance& inst);
// Validation, exactness, grid report with simplicity, identity suite. Passes
// iff the instance is valid, exact, and the codimension inequality and
// equivalence hold; non-distributivity alone is not a failure.
CheckResult analyze_check(const Instance& inst);
// Extracts a certificate, or verifies the given one.
CheckResult certify_check(const Instance& inst, const SimpleCertificate* given = nullptr);
CheckResult laws_check(const Instance& inst);
CheckResult chain_laws_check(int d);
CheckResult grid_check(const Instance& inst);

}  // namespace lsl
