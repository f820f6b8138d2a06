#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace trispec {

/// Outcome of a verification. Failures are recorded, not thrown.
struct Report {
  std::string name;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  /// Key figures, e.g. {"primes", "3"}.
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void warn(std::string what) { warnings.push_back(std::move(what)); }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  template <typename T>
    requires std::is_arithmetic_v<T>
  void note(std::string key, T value) {
    facts.emplace_back(std::move(key), std::to_string(value));
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void absorb(const Report& other) {
    for (const auto& v : other.violations) violations.push_back(other.name + ": " + v);
    for (const auto& w : other.warnings) warnings.push_back(other.name + ": " + w);
  }
  /// "PASS", "WARN" or "FAIL".
  std::string status() const {
    if (!violations.empty()) return "FAIL";
    return warnings.empty() ? "PASS" : "WARN";
  }
};

}  // namespace trispec
