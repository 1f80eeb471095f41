#include "fuzzbet/hfuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzbet {

namespace {

void require_same(const HMembershipFn& f, const HMembershipFn& g, const char* op) {
  if (!same_universe(f.universe(), g.universe())) throw_mismatch(op);
}

}  // namespace

HMembershipFn::HMembershipFn(MembershipFn mu1, MembershipFn mu2)
    : mu1_(std::move(mu1)), mu2_(std::move(mu2)) {
  if (!same_universe(mu1_.universe(), mu2_.universe())) throw_mismatch("h_from_pair");
}

HMembershipFn h_complement(const HMembershipFn& m) {
  std::vector<double> c1(m.size()), c2(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    c1[i] = 1.0 - m.mu1().at(i);
    c2[i] = 1.0 - m.mu2().at(i);
  }
  return HMembershipFn(MembershipFn(m.universe(), std::move(c1)),
                       MembershipFn(m.universe(), std::move(c2)));
}

HMembershipFn h_product(const HMembershipFn& f, const HMembershipFn& g) {
  require_same(f, g, "h_product");
  std::vector<double> p1(f.size()), p2(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    p1[i] = f.mu1().at(i) * g.mu1().at(i);
    p2[i] = f.mu2().at(i) * g.mu2().at(i);
  }
  return HMembershipFn(MembershipFn(f.universe(), std::move(p1)),
                       MembershipFn(f.universe(), std::move(p2)));
}

HJoinMeet h_join_meet(const HMembershipFn& f, const HMembershipFn& g) {
  require_same(f, g, "h_join_meet");
  std::vector<double> j1(f.size()), j2(f.size()), m1(f.size()), m2(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    j1[i] = std::max(f.mu1().at(i), g.mu1().at(i));
    j2[i] = std::max(f.mu2().at(i), g.mu2().at(i));
    m1[i] = std::min(f.mu1().at(i), g.mu1().at(i));
    m2[i] = std::min(f.mu2().at(i), g.mu2().at(i));
  }
  return {HMembershipFn(MembershipFn(f.universe(), std::move(j1)),
                        MembershipFn(f.universe(), std::move(j2))),
          HMembershipFn(MembershipFn(f.universe(), std::move(m1)),
                        MembershipFn(f.universe(), std::move(m2)))};
}

HLevel::HLevel(double a1, double a2) : a1_(a1), a2_(a2) {
  if (!std::isfinite(a1) || !std::isfinite(a2) || !in_D(Hyperbolic(a1, a2))) {
    throw Error(errc::domain, "h level: (a1, a2) must satisfy a1+a2 and a1-a2 in [0,1]");
  }
}

CrispSet h_alpha_cut(const HMembershipFn& m, const HLevel& level) {
  std::vector<std::uint8_t> bits(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    bits[i] = (m.mu1().at(i) > level.threshold1() && m.mu2().at(i) > level.threshold2()) ? 1 : 0;
  }
  return CrispSet(m.universe(), std::move(bits));
}

bool is_atanassov(const HMembershipFn& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.mu1().at(i) < m.mu2().at(i)) return false;
  }
  return true;
}

bool h_is_between(const HMembershipFn& a, const HMembershipFn& b, const HMembershipFn& c) {
  require_same(a, b, "h_is_between");
  require_same(a, c, "h_is_between");
  return is_pointwise_between(a.mu1(), b.mu1(), c.mu1()) &&
         is_pointwise_between(a.mu2(), b.mu2(), c.mu2());
}

std::optional<HMembershipFn> h_witness_decomposition(const HMembershipFn& a,
                                                     const HMembershipFn& b,
                                                     const HMembershipFn& c) {
  if (!h_is_between(a, b, c)) return std::nullopt;
  auto z1 = witness_decomposition(a.mu1(), b.mu1(), c.mu1());
  auto z2 = witness_decomposition(a.mu2(), b.mu2(), c.mu2());
  return HMembershipFn(std::move(*z1), std::move(*z2));
}

namespace {

std::vector<double> component_breakpoints(const MembershipFn& a, const MembershipFn& b,
                                          const MembershipFn& c) {
  std::vector<double> levels{0.0};
  for (const auto* fn : {&a, &b, &c}) {
    levels.insert(levels.end(), fn->values().begin(), fn->values().end());
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

bool cuts_between_at_every_level(const MembershipFn& a, const MembershipFn& b,
                                 const MembershipFn& c) {
  for (double t : component_breakpoints(a, b, c)) {
    if (!is_between(strong_alpha_cut(a, t), strong_alpha_cut(b, t), strong_alpha_cut(c, t))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool h_is_a_between(const HMembershipFn& a, const HMembershipFn& b, const HMembershipFn& c) {
  require_same(a, b, "h_is_a_between");
  require_same(a, c, "h_is_a_between");
  // A level (a1, a2) acts through the component thresholds t1 = a1+a2 and
  // t2 = a1-a2, which range over [0,1] independently; betweenness of the
  // level cuts therefore factorizes into the two component scans.
  return cuts_between_at_every_level(a.mu1(), b.mu1(), c.mu1()) &&
         cuts_between_at_every_level(a.mu2(), b.mu2(), c.mu2());
}

HMetricDResult h_metric_D(const WeightedMeasure& m, const LevelMeasure& eta,
                          const HMembershipFn& a, const HMembershipFn& b) {
  require_same(a, b, "h_metric_D");
  const auto d1 = metric_D(m, eta, a.mu1(), b.mu1());
  const auto d2 = metric_D(m, eta, a.mu2(), b.mu2());
  return {Hyperbolic::from_idempotent(d1.value, d2.value),
          d1.value == 0.0 && d2.value == 0.0 && !(a == b)};
}

}  // namespace fuzzbet
