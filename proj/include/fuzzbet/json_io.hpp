#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzzbet/crisp.hpp"
#include "fuzzbet/fuzzy.hpp"
#include "fuzzbet/hfuzzy.hpp"
#include "fuzzbet/hyperbolic.hpp"
#include "fuzzbet/kernel.hpp"
#include "fuzzbet/level_measure.hpp"
#include "fuzzbet/universe.hpp"

namespace fuzzbet::io {

using json = nlohmann::json;

json to_json(const Hyperbolic& z);          // {"a":..., "b":...}
json to_json_idempotent(const Hyperbolic& z);  // {"plus":..., "minus":...}
// Accepts {"a","b"} or {"plus","minus"}; exactly one form must be present.
Hyperbolic hyperbolic_from_json(const json& j);

json to_json(const CrispSet& s);       // {"members":[...]}
json to_json(const MembershipFn& f);   // {"values":{id: value, ...}}
json to_json(const HMembershipFn& m);  // {"mu1":{...}, "mu2":{...}}
json to_json(const KernelMatrix& k);   // {"labels":[...], "entries":[[...],...]}
json universe_to_json(const WeightedMeasure& m);  // {"elements":[...], "weights":[...]}

// {"elements":[...], "weights":[...]?}; weights default to 1.0 each.
WeightedMeasure universe_from_json(const json& j);
// Weights as an array aligned with the universe or a map id -> weight
// (missing ids default to 1.0).
WeightedMeasure measure_from_json(const json& j, UniversePtr u);
CrispSet crisp_from_json(const json& j, UniversePtr u);
// {"values":{id: value}} or the bare map; ids absent from the map default to
// 0.0 and are reported through `warnings` when given.
MembershipFn membership_from_json(const json& j, UniversePtr u,
                                  std::vector<std::string>* warnings = nullptr);
HMembershipFn hmembership_from_json(const json& j, UniversePtr u,
                                    std::vector<std::string>* warnings = nullptr);
KernelMatrix kernel_from_json(const json& j);

// "lebesgue" or "discrete:<alpha>:<weight>,<alpha>:<weight>,...".
LevelMeasure level_measure_from_spec(const std::string& spec);

// CSV: header "id,weight,<col>,...", one row per element; every named column
// becomes a membership function, and columns whose values are all 0/1 are
// flagged as crisp.
struct CsvColumn {
  std::string name;
  MembershipFn fn;
  bool crisp;
};
struct CsvData {
  WeightedMeasure measure;
  std::vector<CsvColumn> columns;
};
CsvData csv_parse(std::istream& in, const std::string& source_name);

}  // namespace fuzzbet::io
