#pragma once

#include <string>
#include <vector>

namespace chow::dsl {

inline constexpr const char* kEngineVersion = "chowcalc 0.1.0";

struct Check {
  std::string id;
  std::string description;
  std::string anchor;
  bool passed = false;
  std::string expected;
  std::string actual;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string version = kEngineVersion;
  std::string selector;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  /// Stable key order: version, selector, checks, summary.
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
  /// Throws chow::Error on malformed input or an inconsistent summary.
  static Report from_json(const std::string& text);

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace chow::dsl
