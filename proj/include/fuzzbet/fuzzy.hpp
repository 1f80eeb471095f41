#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzbet/crisp.hpp"
#include "fuzzbet/level_measure.hpp"
#include "fuzzbet/universe.hpp"

namespace fuzzbet {

// Membership function X -> [0,1], stored in element order.
class MembershipFn {
public:
  MembershipFn(UniversePtr universe, std::vector<double> values);

  static MembershipFn constant(UniversePtr universe, double value);
  static MembershipFn indicator(const CrispSet& s);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double at(std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const MembershipFn& f, const MembershipFn& g);

private:
  UniversePtr universe_;
  std::vector<double> values_;
};

struct PointwiseOps {
  MembershipFn join;      // max(f,g)
  MembershipFn meet;      // min(f,g)
  MembershipFn product;   // f·g
  MembershipFn complement_of_f;  // 1 - f
};

PointwiseOps pointwise_ops(const MembershipFn& f, const MembershipFn& g);

// Weighted r-norm distance; r in [1,inf], r = infinity gives max_x w_x|f-g|.
double d_r(const WeightedMeasure& m, const MembershipFn& f, const MembershipFn& g, double r);

// t·f + (1-t)·g pointwise, t in [0,1] (t=1 gives f).
MembershipFn linear_between(const MembershipFn& f, const MembershipFn& g, double t);

// min(f,g) <= c <= max(f,g) pointwise (ties compare exactly).
bool is_pointwise_between(const MembershipFn& f, const MembershipFn& g, const MembershipFn& c);

// For c pointwise between: the unique z with c = min(f,g) + z and z <= |f-g|.
std::optional<MembershipFn> witness_decomposition(const MembershipFn& f, const MembershipFn& g,
                                                  const MembershipFn& c);

// Strict cut {x : f(x) > alpha}, alpha in [0,1].
CrispSet strong_alpha_cut(const MembershipFn& f, double alpha);

// Cut-wise betweenness at every level; decided on the breakpoint set
// {0} ∪ values(f,g,c), which covers all alpha in [0,1].
bool is_alpha_between(const MembershipFn& f, const MembershipFn& g, const MembershipFn& c);

struct MetricDResult {
  double value;
  // Set when value == 0 but f != g: the level measure cannot separate the pair,
  // so the metric degenerates to a pseudometric for it.
  bool identity_warning;
};

// Integral over levels of the weighted symmetric-difference of strict cuts,
// evaluated exactly on the breakpoint partition.
MetricDResult metric_D(const WeightedMeasure& m, const LevelMeasure& eta, const MembershipFn& f,
                       const MembershipFn& g);

// D(f,c) + D(c,g) - D(f,g).
double metric_D_triangle_gap(const WeightedMeasure& m, const LevelMeasure& eta,
                             const MembershipFn& f, const MembershipFn& g, const MembershipFn& c);

}  // namespace fuzzbet
