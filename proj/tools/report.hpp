#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuzzbet::cli {

using json = nlohmann::json;

// Uniform command output: one JSON document, or the same content flattened to
// an aligned key/value table. Values in the table are JSON-serialized so both
// renderings re-parse to identical values.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json verdicts = json::object();
  std::vector<json> counterexamples;
  std::vector<std::string> warnings;
  std::string error;
  int exit_status = 0;

  json to_json() const;
  std::string to_table() const;
};

void emit_report(std::ostream& out, const Report& report, const std::string& format);

}  // namespace fuzzbet::cli
