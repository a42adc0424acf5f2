#pragma once

#include <string>
#include <utility>
#include <vector>

namespace poskit {

struct ValidationIssue {
  std::string check;
  std::string detail;
};

/// Outcome of a structural validation: named checks in a fixed order plus
/// one issue per violation, each naming the offending item.
struct ValidationReport {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<ValidationIssue> issues;

  void mark(const std::string& check, bool ok) { checks.emplace_back(check, ok); pass = pass && ok; }
  void fail(const std::string& check, const std::string& detail) {
    issues.push_back({check, detail});
  }
  explicit operator bool() const { return pass; }
};

} // namespace poskit
