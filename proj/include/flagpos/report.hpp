#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace flagpos {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  Json witness;  // null when passed
};

struct Report {
  std::string command;
  Json descriptor = Json::object();
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<Check> checks;
  Json result;  // computed values, emitted after the checks when set

  void add(std::string name, bool passed, Json witness = nullptr);
  void merge(const Report& other, const std::string& prefix = "");
  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(const std::string& format) const;  // json, csv or text
};

}  // namespace flagpos
