#include "fuzzbet/universe.hpp"

#include <cmath>
#include <utility>

#include "fuzzbet/crisp.hpp"

namespace fuzzbet {

FiniteUniverse::FiniteUniverse(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(errc::input, "universe: element list is empty");
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty()) {
      throw Error(errc::input, "universe: empty element identifier at position " +
                                   std::to_string(i));
    }
    auto [it, inserted] = index_.emplace(elements_[i], i);
    if (!inserted) {
      throw Error(errc::input, "universe: duplicate element '" + elements_[i] + "'");
    }
  }
}

UniversePtr FiniteUniverse::create(std::vector<std::string> elements) {
  return UniversePtr(new FiniteUniverse(std::move(elements)));
}

std::optional<std::size_t> FiniteUniverse::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteUniverse::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) {
    throw Error(errc::unknown_label, "universe: unknown element '" + std::string(id) + "'");
  }
  return *i;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->elements() == b->elements();
}

WeightedMeasure::WeightedMeasure(UniversePtr universe, std::vector<double> weights)
    : universe_(std::move(universe)), weights_(std::move(weights)), total_(0.0) {
  if (!universe_) throw Error(errc::input, "measure: null universe");
  if (weights_.size() != universe_->size()) {
    throw Error(errc::input, "measure: expected " + std::to_string(universe_->size()) +
                                 " weights, got " + std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw Error(errc::domain, "measure: weight for '" + universe_->element(i) +
                                    "' must be finite and > 0");
    }
    total_ += weights_[i];
  }
}

WeightedMeasure WeightedMeasure::uniform(UniversePtr universe, double weight) {
  if (!universe) throw Error(errc::input, "measure: null universe");
  return WeightedMeasure(universe, std::vector<double>(universe->size(), weight));
}

double measure_of(const WeightedMeasure& m, const CrispSet& s) {
  if (!same_universe(m.universe(), s.universe())) throw_mismatch("measure_of");
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.contains(i)) total += m.weight(i);
  }
  return total;
}

}  // namespace fuzzbet
