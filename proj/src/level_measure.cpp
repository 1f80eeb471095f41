#include "fuzzbet/level_measure.hpp"

#include <cmath>
#include <string>

namespace fuzzbet {

LevelMeasure LevelMeasure::lebesgue() { return LevelMeasure(Kind::lebesgue, {}); }

LevelMeasure LevelMeasure::discrete(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) {
    throw Error(errc::domain, "level measure: discrete form needs at least one atom");
  }
  double prev = -1.0;
  for (const auto& [alpha, weight] : atoms) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
      throw Error(errc::domain, "level measure: atom level " + std::to_string(alpha) +
                                    " outside [0,1]");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw Error(errc::domain, "level measure: atom weight at level " +
                                    std::to_string(alpha) + " must be finite and > 0");
    }
    if (alpha <= prev) {
      throw Error(errc::domain, "level measure: atom levels must be strictly increasing");
    }
    prev = alpha;
  }
  return LevelMeasure(Kind::discrete, std::move(atoms));
}

}  // namespace fuzzbet
