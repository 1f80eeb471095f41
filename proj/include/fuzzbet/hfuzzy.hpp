#pragma once

#include <optional>
#include <utility>

#include "fuzzbet/fuzzy.hpp"
#include "fuzzbet/hyperbolic.hpp"

namespace fuzzbet {

// Hyperbolic-valued membership function, stored losslessly as the pair of
// idempotent component functions (mu1 along P, mu2 along Q). All operations
// work on the components; the hyperbolic value view is derived.
class HMembershipFn {
public:
  HMembershipFn(MembershipFn mu1, MembershipFn mu2);

  const UniversePtr& universe() const noexcept { return mu1_.universe(); }
  const MembershipFn& mu1() const noexcept { return mu1_; }
  const MembershipFn& mu2() const noexcept { return mu2_; }
  std::size_t size() const noexcept { return mu1_.size(); }
  Hyperbolic value_at(std::size_t i) const {
    return Hyperbolic::from_idempotent(mu1_.at(i), mu2_.at(i));
  }

  friend bool operator==(const HMembershipFn& f, const HMembershipFn& g) {
    return f.mu1_ == g.mu1_ && f.mu2_ == g.mu2_;
  }

private:
  MembershipFn mu1_;
  MembershipFn mu2_;
};

inline HMembershipFn h_from_pair(MembershipFn mu1, MembershipFn mu2) {
  return HMembershipFn(std::move(mu1), std::move(mu2));
}

inline std::pair<MembershipFn, MembershipFn> h_components(const HMembershipFn& m) {
  return {m.mu1(), m.mu2()};
}

HMembershipFn h_complement(const HMembershipFn& m);
HMembershipFn h_product(const HMembershipFn& f, const HMembershipFn& g);

struct HJoinMeet {
  HMembershipFn join;
  HMembershipFn meet;
};

HJoinMeet h_join_meet(const HMembershipFn& f, const HMembershipFn& g);

// Level a = (a1, a2), constrained to the membership region (a1+a2 and a1-a2
// both in [0,1]).
class HLevel {
public:
  HLevel(double a1, double a2);

  double a1() const noexcept { return a1_; }
  double a2() const noexcept { return a2_; }
  double threshold1() const noexcept { return a1_ + a2_; }  // applied to mu1
  double threshold2() const noexcept { return a1_ - a2_; }  // applied to mu2

private:
  double a1_;
  double a2_;
};

// {x : mu1(x) > a1+a2 and mu2(x) > a1-a2}.
CrispSet h_alpha_cut(const HMembershipFn& m, const HLevel& level);

// mu1 >= mu2 everywhere (so values have nonnegative j-part).
bool is_atanassov(const HMembershipFn& m);

// C(x) inside the order interval [A(x) ∧ B(x), A(x) ∨ B(x)] at every x,
// i.e. componentwise pointwise betweenness.
bool h_is_between(const HMembershipFn& a, const HMembershipFn& b, const HMembershipFn& c);

// For C between: the component pair z with C = (A ∧ B) + z.
std::optional<HMembershipFn> h_witness_decomposition(const HMembershipFn& a,
                                                     const HMembershipFn& b,
                                                     const HMembershipFn& c);

// Level-wise betweenness, evaluated per idempotent component: for every pair
// of component thresholds (t1, t2) drawn from the breakpoint sets, the t1-cuts
// of the first components and the t2-cuts of the second components must each
// satisfy crisp betweenness. Equivalent to h_is_between.
bool h_is_a_between(const HMembershipFn& a, const HMembershipFn& b, const HMembershipFn& c);

struct HMetricDResult {
  Hyperbolic value;  // componentwise: plus part D(mu1_a, mu1_b), minus part D(mu2_a, mu2_b)
  bool identity_warning;
};

HMetricDResult h_metric_D(const WeightedMeasure& m, const LevelMeasure& eta,
                          const HMembershipFn& a, const HMembershipFn& b);

}  // namespace fuzzbet
