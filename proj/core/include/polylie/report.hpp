#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polylie {

/// Outcome of a verification routine.
struct Report {
  std::string name;
  /// "PASS", "FAIL" or "UNSUPPORTED".
  std::string verdict = "PASS";
  /// How much the verdict proves, e.g. "EXACT", "EVIDENCE", "CONJECTURAL".
  std::string label = "EXACT";
  std::string detail;
  std::optional<long> points;
  std::optional<double> max_abs_value;
  std::optional<double> tolerance;
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const { return verdict == "PASS"; }
  void fail(const std::string& why) {
    if (verdict == "PASS") detail = why;
    verdict = "FAIL";
  }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

}  // namespace polylie
