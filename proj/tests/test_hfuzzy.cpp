#include <doctest.h>

#include "fuzzbet/hfuzzy.hpp"

using namespace fuzzbet;

namespace {

UniversePtr x2() { return FiniteUniverse::create({"x1", "x2"}); }

// mu1 = (1, 0.5), mu2 = (0, 0.5): values (0.5, 0.5) and (0.5, 0).
HMembershipFn example(const UniversePtr& u) {
  return h_from_pair(MembershipFn(u, {1.0, 0.5}), MembershipFn(u, {0.0, 0.5}));
}

}  // namespace

TEST_CASE("component storage and value view") {
  auto u = x2();
  const auto m = example(u);
  CHECK(m.value_at(0) == Hyperbolic(0.5, 0.5));
  CHECK(m.value_at(1) == Hyperbolic(0.5, 0.0));
  const auto [c1, c2] = h_components(m);
  CHECK(h_from_pair(c1, c2) == m);

  auto v = FiniteUniverse::create({"y"});
  CHECK_THROWS_AS(h_from_pair(MembershipFn(u, {1.0, 0.5}), MembershipFn(v, {0.0})), Error);
}

TEST_CASE("complement and product act per component") {
  auto u = FiniteUniverse::create({"x"});
  const auto m = h_from_pair(MembershipFn(u, {0.25}), MembershipFn(u, {0.75}));
  CHECK(m.value_at(0) == Hyperbolic(0.5, -0.25));
  const auto comp = h_complement(m);
  CHECK(comp.mu1().at(0) == 0.75);
  CHECK(comp.mu2().at(0) == 0.25);
  CHECK(comp.value_at(0) == Hyperbolic(0.5, 0.25));

  const auto a = h_from_pair(MembershipFn(u, {1.0}), MembershipFn(u, {0.0}));
  const auto b = h_from_pair(MembershipFn(u, {0.0}), MembershipFn(u, {1.0}));
  CHECK(h_product(a, b).value_at(0) == Hyperbolic(0.0, 0.0));
  const auto half = h_from_pair(MembershipFn(u, {0.5}), MembershipFn(u, {0.5}));
  CHECK(h_product(half, half).value_at(0) == Hyperbolic(0.25, 0.0));
}

TEST_CASE("join and meet per component") {
  auto u = x2();
  const auto a = h_from_pair(MembershipFn(u, {1.0, 0.25}), MembershipFn(u, {0.0, 0.5}));
  const auto b = h_from_pair(MembershipFn(u, {0.5, 0.75}), MembershipFn(u, {0.25, 0.25}));
  const auto jm = h_join_meet(a, b);
  CHECK(jm.join.mu1().values() == std::vector<double>{1.0, 0.75});
  CHECK(jm.join.mu2().values() == std::vector<double>{0.25, 0.5});
  CHECK(jm.meet.mu1().values() == std::vector<double>{0.5, 0.25});
  CHECK(jm.meet.mu2().values() == std::vector<double>{0.0, 0.25});
}

TEST_CASE("level cuts on the worked example") {
  auto u = x2();
  const auto m = example(u);
  CHECK(h_alpha_cut(m, HLevel(0.0, 0.0)).members() == std::vector<std::string>{"x2"});
  CHECK(h_alpha_cut(m, HLevel(0.3, 0.1)).members() == std::vector<std::string>{"x2"});
  CHECK(h_alpha_cut(m, HLevel(1.0, 0.0)).cardinality() == 0);
}

TEST_CASE("levels outside the membership region are rejected") {
  CHECK_THROWS_AS(HLevel(0.9, 0.5), Error);
  CHECK_THROWS_AS(HLevel(-0.1, 0.0), Error);
  const HLevel ok(0.3, 0.1);
  CHECK(ok.threshold1() == 0.4);
  CHECK(ok.threshold2() == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("membership/non-membership ordering") {
  auto u = x2();
  CHECK(is_atanassov(example(u)));
  const auto bad = h_from_pair(MembershipFn(u, {0.2, 1.0}), MembershipFn(u, {0.6, 0.0}));
  CHECK_FALSE(is_atanassov(bad));
}

TEST_CASE("betweenness reduces to the components") {
  auto u = x2();
  const auto a = h_from_pair(MembershipFn(u, {1.0, 0.25}), MembershipFn(u, {0.0, 0.5}));
  const auto b = h_from_pair(MembershipFn(u, {0.5, 0.75}), MembershipFn(u, {0.25, 0.25}));
  const auto inside = h_from_pair(MembershipFn(u, {0.75, 0.5}), MembershipFn(u, {0.125, 0.375}));
  const auto outside = h_from_pair(MembershipFn(u, {0.75, 0.5}), MembershipFn(u, {0.5, 0.375}));
  CHECK(h_is_between(a, b, inside));
  CHECK(h_is_a_between(a, b, inside));
  CHECK_FALSE(h_is_between(a, b, outside));
  CHECK_FALSE(h_is_a_between(a, b, outside));

  const auto wit = h_witness_decomposition(a, b, inside);
  REQUIRE(wit.has_value());
  const auto jm = h_join_meet(a, b);
  for (std::size_t i = 0; i < inside.size(); ++i) {
    CHECK(jm.meet.mu1().at(i) + wit->mu1().at(i) == inside.mu1().at(i));
    CHECK(jm.meet.mu2().at(i) + wit->mu2().at(i) == inside.mu2().at(i));
  }
  CHECK_FALSE(h_witness_decomposition(a, b, outside).has_value());
}

TEST_CASE("hyperbolic-valued level metric splits per component") {
  auto u = x2();
  const auto m = WeightedMeasure::uniform(u);
  const auto eta = LevelMeasure::lebesgue();
  const auto a = h_from_pair(MembershipFn(u, {1.0, 0.25}), MembershipFn(u, {0.0, 0.5}));
  const auto b = h_from_pair(MembershipFn(u, {0.5, 0.75}), MembershipFn(u, {0.25, 0.25}));
  const auto d = h_metric_D(m, eta, a, b);
  CHECK(d.value.plus() == metric_D(m, eta, a.mu1(), b.mu1()).value);
  CHECK(d.value.minus() == metric_D(m, eta, a.mu2(), b.mu2()).value);
  CHECK(d.value.plus() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.value.minus() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(d.identity_warning);
  CHECK_FALSE(h_metric_D(m, eta, a, a).identity_warning);

  // One degenerate component must not mask a separated pair.
  const auto p = h_from_pair(MembershipFn(u, {0.1, 0.1}), MembershipFn(u, {0.5, 0.5}));
  const auto q = h_from_pair(MembershipFn(u, {0.2, 0.2}), MembershipFn(u, {0.5, 0.5}));
  const auto atom = LevelMeasure::discrete({{0.5, 1.0}});
  const auto dd = h_metric_D(m, atom, p, q);
  CHECK(dd.value == Hyperbolic(0.0, 0.0));
  CHECK(dd.identity_warning);
}
