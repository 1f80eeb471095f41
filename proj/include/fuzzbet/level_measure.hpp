#pragma once

#include <utility>
#include <vector>

#include "fuzzbet/errors.hpp"

namespace fuzzbet {

// Measure on the level interval [0,1] used to aggregate cut distances:
// either Lebesgue, or finitely many atoms {alpha_j -> h_j > 0}.
class LevelMeasure {
public:
  enum class Kind { lebesgue, discrete };

  static LevelMeasure lebesgue();
  // Atoms must be sorted strictly ascending, each alpha in [0,1], each weight > 0.
  static LevelMeasure discrete(std::vector<std::pair<double, double>> atoms);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::pair<double, double>>& atoms() const noexcept { return atoms_; }

private:
  LevelMeasure(Kind kind, std::vector<std::pair<double, double>> atoms)
      : kind_(kind), atoms_(std::move(atoms)) {}

  Kind kind_;
  std::vector<std::pair<double, double>> atoms_;
};

}  // namespace fuzzbet
