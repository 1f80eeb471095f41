#include "report.hpp"

#include <sstream>

namespace fuzzbet::cli {

json Report::to_json() const {
  json j{{"command", command},
         {"inputs", inputs},
         {"results", results},
         {"verdicts", verdicts},
         {"counterexamples", counterexamples},
         {"warnings", warnings},
         {"exit_status", exit_status}};
  j["error"] = error.empty() ? json(nullptr) : json(error);
  return j;
}

namespace {

bool is_leaf(const json& j) {
  if (j.is_object()) return j.empty();
  if (!j.is_array()) return true;
  for (const auto& item : j) {
    if (item.is_object() || item.is_array()) return false;
  }
  return true;  // arrays of scalars print inline
}

void flatten(const json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_leaf(j)) {
    rows.emplace_back(path, j.dump());
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, rows);
    }
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    flatten(j.at(i), path + "[" + std::to_string(i) + "]", rows);
  }
}

}  // namespace

std::string Report::to_table() const {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(to_json(), "", rows);
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size(), ' ') << " = " << value << "\n";
  }
  return out.str();
}

void emit_report(std::ostream& out, const Report& report, const std::string& format) {
  if (format == "table") {
    out << report.to_table();
  } else {
    out << report.to_json().dump(2) << "\n";
  }
}

}  // namespace fuzzbet::cli
