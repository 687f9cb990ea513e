#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lg {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CheckResult {
  std::string name;
  // Stable key locating the statement being checked.
  std::string anchor;
  NamedValues measured;
  NamedValues bounds;
  bool pass = false;
  // Signed slack of the tightest inequality; negative on failure.
  double margin = 0.0;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  // A report is well formed when every check is named and anchored.
  bool self_validate(std::string* problem = nullptr) const;
  void append(const VerificationReport& other);
  // Stable JSON rendering with 17 significant digits.
  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);
};

}  // namespace lg
