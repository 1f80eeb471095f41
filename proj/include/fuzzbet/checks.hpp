#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzbet/fuzzy.hpp"
#include "fuzzbet/universe.hpp"

namespace fuzzbet::checks {

// Deterministic double generation on top of the standard engine; the
// distribution adapters in <random> are implementation-defined, these are not.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(bits() % n); }
  // Uniform in [0,1).
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
  // Uniform on the dyadic grid k/2^20, k in [0, 2^20): arithmetic on a few of
  // these stays exact in doubles, matching the identities tested exactly.
  double dyadic_unit() { return static_cast<double>(bits() >> 44) * 0x1.0p-20; }
  double dyadic_range(double lo, double hi) { return lo + dyadic_unit() * (hi - lo); }

private:
  std::mt19937_64 eng_;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int max_exhaustive = 4;  // cap on |X| for exhaustive subset scans (hard guard: 4)
  int grid_levels = 5;     // membership value grid resolution (hard guard: 5)
  std::optional<long> trials;  // overrides every randomized case count when set
  double tol = 1e-12;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  nlohmann::json counterexample;  // null unless failed
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<PropertyResult> properties;
};

const std::vector<std::string>& suite_names();  // crisp, fuzzy, hyper, hfuzzy

// Runs the named suites in order with one shared generator. Throws
// Error(errc::guard) when options exceed the hard guards, and
// Error(errc::unknown_label) for an unknown suite name.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& suites,
                                    const CheckOptions& options);

// Midpoint Riemann evaluation of the level integral behind metric_D, used as
// an independent cross-check of the exact breakpoint integration.
double metric_D_grid_oracle(const WeightedMeasure& m, const MembershipFn& f,
                            const MembershipFn& g, int levels);

}  // namespace fuzzbet::checks
