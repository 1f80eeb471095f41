#include "fuzzbet/fuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzbet {

namespace {

void require_same(const MembershipFn& f, const MembershipFn& g, const char* op) {
  if (!same_universe(f.universe(), g.universe())) throw_mismatch(op);
}

void require_measure(const WeightedMeasure& m, const MembershipFn& f, const char* op) {
  if (!same_universe(m.universe(), f.universe())) throw_mismatch(op);
}

}  // namespace

MembershipFn::MembershipFn(UniversePtr universe, std::vector<double> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_) throw Error(errc::input, "membership: null universe");
  if (values_.size() != universe_->size()) {
    throw Error(errc::input, "membership: expected " + std::to_string(universe_->size()) +
                                 " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0 || values_[i] > 1.0) {
      throw Error(errc::domain, "membership: value for '" + universe_->element(i) +
                                    "' outside [0,1]");
    }
  }
}

MembershipFn MembershipFn::constant(UniversePtr universe, double value) {
  if (!universe) throw Error(errc::input, "membership: null universe");
  auto n = universe->size();
  return MembershipFn(std::move(universe), std::vector<double>(n, value));
}

MembershipFn MembershipFn::indicator(const CrispSet& s) {
  std::vector<double> values(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) values[i] = s.contains(i) ? 1.0 : 0.0;
  return MembershipFn(s.universe(), std::move(values));
}

bool operator==(const MembershipFn& f, const MembershipFn& g) {
  return same_universe(f.universe_, g.universe_) && f.values_ == g.values_;
}

PointwiseOps pointwise_ops(const MembershipFn& f, const MembershipFn& g) {
  require_same(f, g, "pointwise_ops");
  const auto n = f.size();
  std::vector<double> join(n), meet(n), prod(n), comp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.at(i);
    const double y = g.at(i);
    join[i] = std::max(x, y);
    meet[i] = std::min(x, y);
    prod[i] = x * y;
    comp[i] = 1.0 - x;
  }
  return {MembershipFn(f.universe(), std::move(join)), MembershipFn(f.universe(), std::move(meet)),
          MembershipFn(f.universe(), std::move(prod)), MembershipFn(f.universe(), std::move(comp))};
}

double d_r(const WeightedMeasure& m, const MembershipFn& f, const MembershipFn& g, double r) {
  require_same(f, g, "d_r");
  require_measure(m, f, "d_r");
  if (std::isnan(r) || r < 1.0) {
    throw Error(errc::domain, "d_r: order r must be in [1, inf]");
  }
  if (std::isinf(r)) {
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      best = std::max(best, m.weight(i) * std::abs(f.at(i) - g.at(i)));
    }
    return best;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    total += m.weight(i) * std::pow(std::abs(f.at(i) - g.at(i)), r);
  }
  return std::pow(total, 1.0 / r);
}

MembershipFn linear_between(const MembershipFn& f, const MembershipFn& g, double t) {
  require_same(f, g, "linear_between");
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(errc::domain, "linear_between: t must be in [0,1]");
  }
  std::vector<double> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    // Clamp float noise so results stay valid membership values.
    values[i] = std::clamp(t * f.at(i) + (1.0 - t) * g.at(i), 0.0, 1.0);
  }
  return MembershipFn(f.universe(), std::move(values));
}

bool is_pointwise_between(const MembershipFn& f, const MembershipFn& g, const MembershipFn& c) {
  require_same(f, g, "is_pointwise_between");
  require_same(f, c, "is_pointwise_between");
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double lo = std::min(f.at(i), g.at(i));
    const double hi = std::max(f.at(i), g.at(i));
    if (c.at(i) < lo || c.at(i) > hi) return false;
  }
  return true;
}

std::optional<MembershipFn> witness_decomposition(const MembershipFn& f, const MembershipFn& g,
                                                  const MembershipFn& c) {
  if (!is_pointwise_between(f, g, c)) return std::nullopt;
  std::vector<double> z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    z[i] = c.at(i) - std::min(f.at(i), g.at(i));
  }
  return MembershipFn(f.universe(), std::move(z));
}

CrispSet strong_alpha_cut(const MembershipFn& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(errc::domain, "strong_alpha_cut: level must be in [0,1]");
  }
  std::vector<std::uint8_t> bits(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) bits[i] = f.at(i) > alpha ? 1 : 0;
  return CrispSet(f.universe(), std::move(bits));
}

namespace {

// Sorted distinct {0} ∪ values of the given functions. Strict cuts are
// constant between consecutive entries, so these levels decide everything.
std::vector<double> breakpoints(std::initializer_list<const MembershipFn*> fns,
                                bool include_one) {
  std::vector<double> levels{0.0};
  if (include_one) levels.push_back(1.0);
  for (const auto* fn : fns) {
    levels.insert(levels.end(), fn->values().begin(), fn->values().end());
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

double sym_diff_weight(const WeightedMeasure& m, const MembershipFn& f, const MembershipFn& g,
                       double alpha) {
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((f.at(i) > alpha) != (g.at(i) > alpha)) total += m.weight(i);
  }
  return total;
}

}  // namespace

bool is_alpha_between(const MembershipFn& f, const MembershipFn& g, const MembershipFn& c) {
  require_same(f, g, "is_alpha_between");
  require_same(f, c, "is_alpha_between");
  for (double alpha : breakpoints({&f, &g, &c}, false)) {
    if (!is_between(strong_alpha_cut(f, alpha), strong_alpha_cut(g, alpha),
                    strong_alpha_cut(c, alpha))) {
      return false;
    }
  }
  return true;
}

MetricDResult metric_D(const WeightedMeasure& m, const LevelMeasure& eta, const MembershipFn& f,
                       const MembershipFn& g) {
  require_same(f, g, "metric_D");
  require_measure(m, f, "metric_D");
  double value = 0.0;
  if (eta.kind() == LevelMeasure::Kind::lebesgue) {
    const auto levels = breakpoints({&f, &g}, true);
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      value += (levels[i + 1] - levels[i]) * sym_diff_weight(m, f, g, levels[i]);
    }
  } else {
    for (const auto& [alpha, weight] : eta.atoms()) {
      value += weight * sym_diff_weight(m, f, g, alpha);
    }
  }
  return {value, value == 0.0 && !(f == g)};
}

double metric_D_triangle_gap(const WeightedMeasure& m, const LevelMeasure& eta,
                             const MembershipFn& f, const MembershipFn& g, const MembershipFn& c) {
  return metric_D(m, eta, f, c).value + metric_D(m, eta, c, g).value -
         metric_D(m, eta, f, g).value;
}

}  // namespace fuzzbet
