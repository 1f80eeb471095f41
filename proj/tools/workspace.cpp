#include "workspace.hpp"

#include <algorithm>
#include <fstream>

namespace fuzzbet::cli {

namespace {

using nlohmann::json;

json parse_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(errc::input, "cannot open '" + file.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(errc::input, file.filename().string() + ": " + e.what());
  }
}

template <typename T>
void insert_named(std::map<std::string, T>& into, const std::string& name, T value,
                  const char* kind, const std::string& source) {
  if (name.empty()) {
    throw Error(errc::input, source + ": " + kind + " with empty name");
  }
  if (!into.emplace(name, std::move(value)).second) {
    throw Error(errc::input, source + ": duplicate " + kind + " '" + name + "'");
  }
}

}  // namespace

Workspace Workspace::load(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  Workspace ws;
  std::vector<fs::path> json_files;
  std::vector<fs::path> csv_files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = entry.path().extension().string();
      if (ext == ".json") json_files.push_back(entry.path());
      if (ext == ".csv") csv_files.push_back(entry.path());
    }
    std::sort(json_files.begin(), json_files.end());
    std::sort(csv_files.begin(), csv_files.end());
  } else if (fs::is_regular_file(path)) {
    const auto ext = path.extension().string();
    if (ext == ".json") {
      json_files.push_back(path);
    } else if (ext == ".csv") {
      csv_files.push_back(path);
    } else {
      throw Error(errc::input, "workspace: unsupported file type '" + path.string() + "'");
    }
  } else {
    throw Error(errc::input, "workspace: path '" + path.string() + "' not found");
  }

  std::vector<std::pair<json, std::string>> docs;
  for (const auto& file : json_files) {
    docs.emplace_back(parse_json_file(file), file.filename().string());
  }
  // Universes first (CSV files bring their own), then everything that
  // references them.
  for (const auto& [doc, source] : docs) {
    if (!doc.is_object()) throw Error(errc::input, source + ": top level must be an object");
    if (!doc.contains("universes")) continue;
    const auto& col = doc.at("universes");
    if (!col.is_object()) throw Error(errc::input, source + ": 'universes' must be an object");
    for (const auto& [name, spec] : col.items()) {
      insert_named(ws.universes_, name, io::universe_from_json(spec), "universe", source);
    }
  }
  for (const auto& file : csv_files) ws.ingest_csv(file);
  for (const auto& [doc, source] : docs) ws.ingest_json(doc, source);
  return ws;
}

void Workspace::ingest_json(const json& doc, const std::string& source) {
  static const std::vector<std::string> known = {"universes", "measures",   "sets",
                                                 "memberships", "hmemberships", "kernels"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(errc::input, source + ": unknown collection '" + key + "'");
    }
    if (!value.is_object()) {
      throw Error(errc::input, source + ": '" + key + "' must be an object");
    }
  }
  if (doc.contains("measures")) {
    for (const auto& [name, spec] : doc.at("measures").items()) {
      auto u = resolve_universe(spec, source + ": measure '" + name + "'");
      insert_named(measures_, name, io::measure_from_json(spec, u), "measure", source);
    }
  }
  if (doc.contains("sets")) {
    for (const auto& [name, spec] : doc.at("sets").items()) {
      auto u = resolve_universe(spec, source + ": set '" + name + "'");
      insert_named(sets_, name, io::crisp_from_json(spec, u), "set", source);
    }
  }
  if (doc.contains("memberships")) {
    for (const auto& [name, spec] : doc.at("memberships").items()) {
      auto u = resolve_universe(spec, source + ": membership '" + name + "'");
      std::vector<std::string> local;
      insert_named(memberships_, name, io::membership_from_json(spec, u, &local),
                   "membership function", source);
      for (const auto& w : local) warnings_.push_back("'" + name + "' " + w);
    }
  }
  if (doc.contains("hmemberships")) {
    for (const auto& [name, spec] : doc.at("hmemberships").items()) {
      auto u = resolve_universe(spec, source + ": h-membership '" + name + "'");
      std::vector<std::string> local;
      insert_named(hmemberships_, name, io::hmembership_from_json(spec, u, &local),
                   "h-membership function", source);
      for (const auto& w : local) warnings_.push_back("'" + name + "' " + w);
    }
  }
  if (doc.contains("kernels")) {
    for (const auto& [name, spec] : doc.at("kernels").items()) {
      insert_named(kernels_, name, io::kernel_from_json(spec), "kernel", source);
    }
  }
}

void Workspace::ingest_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(errc::input, "cannot open '" + file.string() + "'");
  const auto source = file.filename().string();
  auto data = io::csv_parse(in, source);
  const auto stem = file.stem().string();
  insert_named(universes_, stem, data.measure, "universe", source);
  for (auto& column : data.columns) {
    if (column.crisp) {
      std::vector<std::uint8_t> bits(column.fn.size());
      for (std::size_t i = 0; i < column.fn.size(); ++i) {
        bits[i] = column.fn.at(i) == 1.0 ? 1 : 0;
      }
      insert_named(sets_, column.name, CrispSet(column.fn.universe(), std::move(bits)), "set",
                   source);
    }
    insert_named(memberships_, column.name, std::move(column.fn), "membership function", source);
  }
}

UniversePtr Workspace::resolve_universe(const json& obj, const std::string& context) const {
  if (!obj.is_object() || !obj.contains("universe") || !obj.at("universe").is_string()) {
    throw Error(errc::input, context + ": missing 'universe' reference");
  }
  const auto name = obj.at("universe").get<std::string>();
  auto it = universes_.find(name);
  if (it == universes_.end()) {
    throw Error(errc::input, context + ": universe '" + name + "' is not defined");
  }
  return it->second.universe();
}

void Workspace::fail_lookup(const std::string& name, const std::string& wanted) const {
  std::string actual;
  if (universes_.count(name)) actual = "universe";
  if (measures_.count(name)) actual = "measure";
  if (sets_.count(name)) actual = "crisp set";
  if (memberships_.count(name)) actual = "membership function";
  if (hmemberships_.count(name)) actual = "h-membership function";
  if (kernels_.count(name)) actual = "kernel";
  if (actual.empty()) {
    throw Error(errc::unknown_label, "unknown object '" + name + "'");
  }
  throw Error(errc::universe_mismatch,
              "'" + name + "' is a " + actual + ", expected a " + wanted);
}

const WeightedMeasure& Workspace::universe(const std::string& name) const {
  auto it = universes_.find(name);
  if (it == universes_.end()) fail_lookup(name, "universe");
  return it->second;
}

const WeightedMeasure& Workspace::measure(const std::string& name) const {
  auto it = measures_.find(name);
  if (it == measures_.end()) {
    auto uit = universes_.find(name);  // a universe's own weights act as a measure
    if (uit != universes_.end()) return uit->second;
    fail_lookup(name, "measure");
  }
  return it->second;
}

const CrispSet& Workspace::set(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) fail_lookup(name, "crisp set");
  return it->second;
}

const MembershipFn& Workspace::membership(const std::string& name) const {
  auto it = memberships_.find(name);
  if (it == memberships_.end()) fail_lookup(name, "membership function");
  return it->second;
}

const HMembershipFn& Workspace::hmembership(const std::string& name) const {
  auto it = hmemberships_.find(name);
  if (it == hmemberships_.end()) fail_lookup(name, "h-membership function");
  return it->second;
}

const KernelMatrix& Workspace::kernel(const std::string& name) const {
  auto it = kernels_.find(name);
  if (it == kernels_.end()) fail_lookup(name, "kernel");
  return it->second;
}

}  // namespace fuzzbet::cli
