#include "flagpos/report.hpp"

#include <sstream>

#include "flagpos/error.hpp"

namespace flagpos {

void Report::add(std::string name, bool passed, Json witness) {
  checks.push_back({std::move(name), passed, passed ? Json(nullptr) : std::move(witness)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks)
    if (!c.passed) ++f;
  return f;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["descriptor"] = descriptor;
  j["seed"] = seed;
  j["samples"] = samples;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (!result.is_null()) j["result"] = result;
  return j;
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "command,name,passed,witness\n";
  for (const auto& c : checks)
    os << csv_field(command) << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ','
       << csv_field(c.witness.is_null() ? "" : c.witness.dump()) << '\n';
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " " << descriptor.dump() << " seed=" << seed << " samples=" << samples << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.is_null()) os << "  " << c.witness.dump();
    os << '\n';
  }
  if (!result.is_null()) os << result.dump(2) << '\n';
  os << (checks.size() - failures()) << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return to_csv();
  if (format == "text") return to_text();
  throw Error(ErrorCode::InvalidArgument, "unknown format " + format);
}

}  // namespace flagpos
