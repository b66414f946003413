#ifndef POINCARE_REPORT_HPP
#define POINCARE_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace poincare {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First failing case, empty on success.
  std::string counterexample;
};

/// Outcome of a batch of exact identity checks. Failures are data, not
/// exceptions.
struct Report {
  std::vector<CheckResult> checks;
  /// Informational lines that do not affect `passed()`.
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace poincare

#endif  // POINCARE_REPORT_HPP
