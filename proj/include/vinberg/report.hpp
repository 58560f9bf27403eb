#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace vinberg {

/// One row of a check report: what was expected, what was computed.
struct CheckItem {
  std::string name;
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
};

/// Common report shape: {check, parameters, items: [{name, expected, got, pass}], pass}.
struct CheckReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckItem> items;

  void add(std::string name, nlohmann::json expected, nlohmann::json got, bool pass) {
    items.push_back({std::move(name), std::move(expected), std::move(got), pass});
  }
  /// Pass with expected == got.
  void add_eq(std::string name, const nlohmann::json& expected, const nlohmann::json& got) {
    add(std::move(name), expected, got, expected == got);
  }

  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }

  std::vector<const CheckItem*> failures() const {
    std::vector<const CheckItem*> out;
    for (const auto& i : items)
      if (!i.pass) out.push_back(&i);
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : items) arr.push_back({{"name", i.name}, {"expected", i.expected}, {"got", i.got}, {"pass", i.pass}});
    return {{"check", check}, {"parameters", parameters}, {"items", arr}, {"pass", pass()}};
  }
};

}  // namespace vinberg
