#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fuzzbet/json_io.hpp"

namespace fuzzbet::cli {

// Named objects loaded from JSON/CSV sources. Names are unique per kind, and
// every set/membership references a universe defined in the same workspace.
class Workspace {
public:
  static Workspace load(const std::filesystem::path& path);

  const WeightedMeasure& universe(const std::string& name) const;
  const WeightedMeasure& measure(const std::string& name) const;
  const CrispSet& set(const std::string& name) const;
  const MembershipFn& membership(const std::string& name) const;
  const HMembershipFn& hmembership(const std::string& name) const;
  const KernelMatrix& kernel(const std::string& name) const;

  const std::map<std::string, WeightedMeasure>& universes() const { return universes_; }
  const std::map<std::string, WeightedMeasure>& measures() const { return measures_; }
  const std::map<std::string, CrispSet>& sets() const { return sets_; }
  const std::map<std::string, MembershipFn>& memberships() const { return memberships_; }
  const std::map<std::string, HMembershipFn>& hmemberships() const { return hmemberships_; }
  const std::map<std::string, KernelMatrix>& kernels() const { return kernels_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  void ingest_json(const nlohmann::json& doc, const std::string& source);
  void ingest_csv(const std::filesystem::path& file);
  UniversePtr resolve_universe(const nlohmann::json& obj, const std::string& context) const;
  [[noreturn]] void fail_lookup(const std::string& name, const std::string& wanted) const;

  std::map<std::string, WeightedMeasure> universes_;
  std::map<std::string, WeightedMeasure> measures_;
  std::map<std::string, CrispSet> sets_;
  std::map<std::string, MembershipFn> memberships_;
  std::map<std::string, HMembershipFn> hmemberships_;
  std::map<std::string, KernelMatrix> kernels_;
  std::vector<std::string> warnings_;
};

}  // namespace fuzzbet::cli
