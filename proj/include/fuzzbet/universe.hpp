#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fuzzbet/errors.hpp"

namespace fuzzbet {

class FiniteUniverse;
class CrispSet;

using UniversePtr = std::shared_ptr<const FiniteUniverse>;

// Finite ordered ground set. Element order is fixed at construction and every
// indicator/membership vector in the library aligns with it.
class FiniteUniverse {
public:
  static UniversePtr create(std::vector<std::string> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws unknown_label

private:
  explicit FiniteUniverse(std::vector<std::string> elements);

  std::vector<std::string> elements_;
  std::unordered_map<std::string_view, std::size_t> index_;
};

// True when both handles denote the same ground set (same object or equal
// element sequences), so their vectors align.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// Strictly positive weight per element; total is cached.
class WeightedMeasure {
public:
  WeightedMeasure(UniversePtr universe, std::vector<double> weights);
  static WeightedMeasure uniform(UniversePtr universe, double weight = 1.0);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_.at(i); }
  double total() const noexcept { return total_; }

private:
  UniversePtr universe_;
  std::vector<double> weights_;
  double total_;
};

double measure_of(const WeightedMeasure& m, const CrispSet& s);

}  // namespace fuzzbet
