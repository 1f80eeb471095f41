#include "fuzzbet/json_io.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace fuzzbet::io {

namespace {

double number_field(const json& j, const std::string& context) {
  if (!j.is_number()) {
    throw Error(errc::input, context + ": expected a number");
  }
  return j.get<double>();
}

const json& object_field(const json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(errc::input, context + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::vector<double> value_vector(const json& map, const UniversePtr& u,
                                 const std::string& context,
                                 std::vector<std::string>* warnings) {
  if (!map.is_object()) {
    throw Error(errc::input, context + ": expected an object of element values");
  }
  std::vector<double> values(u->size(), 0.0);
  std::vector<bool> present(u->size(), false);
  for (const auto& [key, val] : map.items()) {
    if (key == "universe") continue;
    auto idx = u->find(key);
    if (!idx) {
      throw Error(errc::input, context + ": '" + key + "' is not an element of the universe");
    }
    values[*idx] = number_field(val, context + ": value for '" + key + "'");
    present[*idx] = true;
  }
  if (warnings) {
    for (std::size_t i = 0; i < u->size(); ++i) {
      if (!present[i]) {
        warnings->push_back(context + ": no value for '" + u->element(i) +
                            "', defaulting to 0");
      }
    }
  }
  return values;
}

}  // namespace

json to_json(const Hyperbolic& z) { return json{{"a", z.a()}, {"b", z.b()}}; }

json to_json_idempotent(const Hyperbolic& z) {
  return json{{"plus", z.plus()}, {"minus", z.minus()}};
}

Hyperbolic hyperbolic_from_json(const json& j) {
  if (!j.is_object()) {
    throw Error(errc::input, "hyperbolic value: expected an object");
  }
  const bool cartesian = j.contains("a") || j.contains("b");
  const bool idempotent = j.contains("plus") || j.contains("minus");
  if (cartesian == idempotent) {
    throw Error(errc::input,
                "hyperbolic value: give exactly one of the forms {a, b} or {plus, minus}");
  }
  if (cartesian) {
    return Hyperbolic(number_field(object_field(j, "a", "hyperbolic value"), "a"),
                      number_field(object_field(j, "b", "hyperbolic value"), "b"));
  }
  return Hyperbolic::from_idempotent(
      number_field(object_field(j, "plus", "hyperbolic value"), "plus"),
      number_field(object_field(j, "minus", "hyperbolic value"), "minus"));
}

json to_json(const CrispSet& s) { return json{{"members", s.members()}}; }

json to_json(const MembershipFn& f) {
  json values = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    values[f.universe()->element(i)] = f.at(i);
  }
  return json{{"values", std::move(values)}};
}

json to_json(const HMembershipFn& m) {
  return json{{"mu1", to_json(m.mu1()).at("values")}, {"mu2", to_json(m.mu2()).at("values")}};
}

json to_json(const KernelMatrix& k) {
  json rows = json::array();
  for (std::size_t i = 0; i < k.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k.size(); ++j) row.push_back(k.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"labels", k.labels()}, {"entries", std::move(rows)}};
}

json universe_to_json(const WeightedMeasure& m) {
  return json{{"elements", m.universe()->elements()}, {"weights", m.weights()}};
}

WeightedMeasure universe_from_json(const json& j) {
  const json& elems = object_field(j, "elements", "universe");
  if (!elems.is_array() || elems.empty()) {
    throw Error(errc::input, "universe: 'elements' must be a non-empty array");
  }
  std::vector<std::string> ids;
  for (const auto& e : elems) {
    if (!e.is_string()) throw Error(errc::input, "universe: element ids must be strings");
    ids.push_back(e.get<std::string>());
  }
  auto u = FiniteUniverse::create(std::move(ids));
  if (j.contains("weights")) {
    return measure_from_json(j, u);
  }
  return WeightedMeasure::uniform(u);
}

WeightedMeasure measure_from_json(const json& j, UniversePtr u) {
  const json& w = object_field(j, "weights", "measure");
  std::vector<double> weights(u->size(), 1.0);
  if (w.is_array()) {
    if (w.size() != u->size()) {
      throw Error(errc::input, "measure: 'weights' array must have one entry per element");
    }
    for (std::size_t i = 0; i < u->size(); ++i) {
      weights[i] = number_field(w.at(i), "measure: weight " + std::to_string(i));
    }
  } else if (w.is_object()) {
    for (const auto& [key, val] : w.items()) {
      auto idx = u->find(key);
      if (!idx) {
        throw Error(errc::input, "measure: '" + key + "' is not an element of the universe");
      }
      weights[*idx] = number_field(val, "measure: weight for '" + key + "'");
    }
  } else {
    throw Error(errc::input, "measure: 'weights' must be an array or an object");
  }
  return WeightedMeasure(std::move(u), std::move(weights));
}

CrispSet crisp_from_json(const json& j, UniversePtr u) {
  const json& members = object_field(j, "members", "set");
  if (!members.is_array()) throw Error(errc::input, "set: 'members' must be an array");
  std::vector<std::string> ids;
  for (const auto& e : members) {
    if (!e.is_string()) throw Error(errc::input, "set: member ids must be strings");
    ids.push_back(e.get<std::string>());
  }
  for (const auto& id : ids) {
    if (!u->find(id)) {
      throw Error(errc::input, "set: '" + id + "' is not an element of the universe");
    }
  }
  return CrispSet::of(std::move(u), std::span<const std::string>(ids));
}

MembershipFn membership_from_json(const json& j, UniversePtr u,
                                  std::vector<std::string>* warnings) {
  const json& map = j.is_object() && j.contains("values") ? j.at("values") : j;
  auto values = value_vector(map, u, "membership", warnings);
  return MembershipFn(std::move(u), std::move(values));
}

HMembershipFn hmembership_from_json(const json& j, UniversePtr u,
                                    std::vector<std::string>* warnings) {
  auto v1 = value_vector(object_field(j, "mu1", "h-membership"), u, "h-membership: mu1", warnings);
  auto v2 = value_vector(object_field(j, "mu2", "h-membership"), u, "h-membership: mu2", warnings);
  return HMembershipFn(MembershipFn(u, std::move(v1)), MembershipFn(u, std::move(v2)));
}

KernelMatrix kernel_from_json(const json& j) {
  const json& labels = object_field(j, "labels", "kernel");
  const json& entries = object_field(j, "entries", "kernel");
  if (!labels.is_array() || !entries.is_array()) {
    throw Error(errc::input, "kernel: 'labels' and 'entries' must be arrays");
  }
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw Error(errc::input, "kernel: labels must be strings");
    names.push_back(l.get<std::string>());
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw Error(errc::input, "kernel: 'entries' must be an array of rows");
    std::vector<double> r;
    for (const auto& v : row) r.push_back(number_field(v, "kernel: entry"));
    rows.push_back(std::move(r));
  }
  if (rows.size() != names.size()) {
    throw Error(errc::input, "kernel: need exactly one row per label");
  }
  return KernelMatrix(std::move(names), rows);
}

LevelMeasure level_measure_from_spec(const std::string& spec) {
  if (spec == "lebesgue") return LevelMeasure::lebesgue();
  const std::string prefix = "discrete:";
  if (spec.rfind(prefix, 0) != 0) {
    throw Error(errc::input, "level measure: expected 'lebesgue' or 'discrete:<alpha>:<weight>,...'");
  }
  std::vector<std::pair<double, double>> atoms;
  std::stringstream body(spec.substr(prefix.size()));
  std::string item;
  while (std::getline(body, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(errc::input, "level measure: atom '" + item + "' must be '<alpha>:<weight>'");
    }
    try {
      std::size_t used = 0;
      const double alpha = std::stod(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string wtext = item.substr(colon + 1);
      const double weight = std::stod(wtext, &used);
      if (used != wtext.size()) throw std::invalid_argument(item);
      atoms.emplace_back(alpha, weight);
    } catch (const std::logic_error&) {
      throw Error(errc::input, "level measure: cannot parse atom '" + item + "'");
    }
  }
  try {
    return LevelMeasure::discrete(std::move(atoms));
  } catch (const Error& e) {
    throw Error(errc::input, e.what());
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

double parse_csv_number(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(errc::input, context + ": cannot parse number '" + text + "'");
  }
}

}  // namespace

CsvData csv_parse(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(errc::input, source_name + ": empty file (header row required)");
  }
  auto header = split_csv_line(line);
  for (auto& h : header) h = trimmed(h);
  if (header.size() < 2 || header[0] != "id" || header[1] != "weight") {
    throw Error(errc::input, source_name + ": header must start with 'id,weight'");
  }
  const std::size_t ncols = header.size() - 2;
  std::vector<std::string> ids;
  std::vector<double> weights;
  std::vector<std::vector<double>> columns(ncols);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    const std::string where = source_name + " row " + std::to_string(row);
    if (fields.size() != header.size()) {
      throw Error(errc::input, where + ": expected " + std::to_string(header.size()) +
                                   " fields, got " + std::to_string(fields.size()));
    }
    ids.push_back(trimmed(fields[0]));
    weights.push_back(parse_csv_number(trimmed(fields[1]), where + " column 'weight'"));
    for (std::size_t c = 0; c < ncols; ++c) {
      const double v =
          parse_csv_number(trimmed(fields[c + 2]), where + " column '" + header[c + 2] + "'");
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(errc::input, where + " column '" + header[c + 2] +
                                     "': membership value " + trimmed(fields[c + 2]) +
                                     " outside [0,1]");
      }
      columns[c].push_back(v);
    }
  }
  UniversePtr u;
  try {
    u = FiniteUniverse::create(ids);
  } catch (const Error& e) {
    throw Error(errc::input, source_name + ": " + e.what());
  }
  WeightedMeasure measure = [&] {
    try {
      return WeightedMeasure(u, weights);
    } catch (const Error& e) {
      throw Error(errc::input, source_name + ": " + e.what());
    }
  }();
  CsvData out{std::move(measure), {}};
  for (std::size_t c = 0; c < ncols; ++c) {
    bool crisp = true;
    for (double v : columns[c]) {
      if (v != 0.0 && v != 1.0) {
        crisp = false;
        break;
      }
    }
    out.columns.push_back({header[c + 2], MembershipFn(u, std::move(columns[c])), crisp});
  }
  return out;
}

}  // namespace fuzzbet::io
