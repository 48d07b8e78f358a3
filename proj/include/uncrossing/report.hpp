#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace uncrossing {

/// Outcome of one named check. Failures keep up to `kMaxWitnesses`
/// witnesses; `violations` counts all of them.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json info = nlohmann::json::object();

  explicit Check(std::string check_name = {}) : name(std::move(check_name)) {}

  bool passed() const noexcept { return violations == 0; }

  void pass() { ++cases; }
  void fail(nlohmann::json witness) {
    ++cases;
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
  void expect(bool ok, nlohmann::json witness) {
    if (ok) pass();
    else fail(std::move(witness));
  }

  /// Folds another worker's partial result for the same check into this one.
  void merge(const Check& other) {
    cases += other.cases;
    violations += other.violations;
    for (const auto& w : other.witnesses)
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
    for (const auto& [k, v] : other.info.items()) info[k] = v;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name}, {"status", passed() ? "pass" : "fail"}, {"cases", cases}};
    if (!passed()) {
      j["violations"] = violations;
      j["witness"] = witnesses;
    }
    if (!info.empty()) j["info"] = info;
    return j;
  }
};

struct Report {
  std::string poset;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return {{"poset", poset}, {"checks", std::move(arr)}};
  }
};

}  // namespace uncrossing
