#include "fuzzbet/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "fuzzbet/crisp.hpp"
#include "fuzzbet/hfuzzy.hpp"
#include "fuzzbet/hyperbolic.hpp"

namespace fuzzbet::checks {

namespace {

using nlohmann::json;

UniversePtr make_universe(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back("x" + std::to_string(i));
  return FiniteUniverse::create(std::move(ids));
}

// Dyadic weights keep exhaustive-scan sums exact in double arithmetic.
WeightedMeasure random_measure(Rng& rng, const UniversePtr& u) {
  std::vector<double> w(u->size());
  for (auto& x : w) x = 0.125 + rng.dyadic_unit() * 2.0;
  return WeightedMeasure(u, std::move(w));
}

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.dyadic_unit();
  return v;
}

std::uint64_t mask_of(const CrispSet& s) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.contains(i)) m |= std::uint64_t{1} << i;
  }
  return m;
}

json set_json(const CrispSet& s) { return json(s.members()); }

json triple_json(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b,
                 const CrispSet& c) {
  return json{{"universe", m.universe()->elements()},
              {"weights", m.weights()},
              {"A", set_json(a)},
              {"B", set_json(b)},
              {"C", set_json(c)}};
}

json fn_triple_json(const WeightedMeasure& m, const MembershipFn& f, const MembershipFn& g,
                    const MembershipFn& c) {
  return json{{"universe", m.universe()->elements()},
              {"weights", m.weights()},
              {"f", f.values()},
              {"g", g.values()},
              {"c", c.values()}};
}

json h_json(const Hyperbolic& z) { return json{{"a", z.a()}, {"b", z.b()}}; }

struct Prop {
  PropertyResult res;

  explicit Prop(std::string name) { res.name = std::move(name); }

  bool ok() const { return res.passed; }
  void tally() { ++res.cases; }
  void fail(json counterexample) {
    if (!res.passed) return;
    res.passed = false;
    res.counterexample = std::move(counterexample);
  }
  void expect(bool condition, const json& counterexample) {
    tally();
    if (!condition) fail(counterexample);
  }
};

long trials_or(const CheckOptions& o, long dflt) { return o.trials ? *o.trials : dflt; }

// Odometer over `digits.size()` positions with `base` values each; returns
// false once the scan wraps.
bool advance(std::vector<int>& digits, int base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

std::vector<double> grid_values(int levels) {
  std::vector<double> v(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    v[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(levels - 1);
  }
  return v;
}

// ---------------------------------------------------------------------------
// crisp suite

PropertyResult crisp_dsigma_metric_axioms(Rng& rng, const CheckOptions& o) {
  Prop p("crisp.dsigma_metric_axioms");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = random_measure(rng, u);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<CrispSet> sets;
    for (std::uint64_t k = 0; k < count; ++k) sets.push_back(CrispSet::from_mask(u, k));
    for (std::uint64_t i = 0; i < count && p.ok(); ++i) {
      for (std::uint64_t j = 0; j < count && p.ok(); ++j) {
        const double d = d_sigma(m, sets[i], sets[j]);
        p.expect(d == d_sigma(m, sets[j], sets[i]),
                 triple_json(m, sets[i], sets[j], sets[j]));
        p.expect((d == 0.0) == (i == j), triple_json(m, sets[i], sets[j], sets[j]));
        p.expect(d >= 0.0, triple_json(m, sets[i], sets[j], sets[j]));
        for (std::uint64_t k = 0; k < count && p.ok(); ++k) {
          p.expect(d <= d_sigma(m, sets[i], sets[k]) + d_sigma(m, sets[k], sets[j]),
                   triple_json(m, sets[i], sets[j], sets[k]));
        }
      }
    }
  }
  return p.res;
}

PropertyResult crisp_triangle_equality_betweenness(Rng& rng, const CheckOptions& o) {
  Prop p("crisp.triangle_equality_betweenness");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = random_measure(rng, u);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<CrispSet> sets;
    for (std::uint64_t k = 0; k < count; ++k) sets.push_back(CrispSet::from_mask(u, k));
    for (std::uint64_t ia = 0; ia < count && p.ok(); ++ia) {
      for (std::uint64_t ib = 0; ib < count && p.ok(); ++ib) {
        for (std::uint64_t ic = 0; ic < count && p.ok(); ++ic) {
          const auto& a = sets[ia];
          const auto& b = sets[ib];
          const auto& c = sets[ic];
          const double gap = triangle_gap(m, a, b, c);
          // Indicator form of the same gap; dyadic weights make both exact.
          double q = 0.0;
          for (std::size_t x = 0; x < a.size(); ++x) {
            const double ia_ = a.contains(x) ? 1.0 : 0.0;
            const double ib_ = b.contains(x) ? 1.0 : 0.0;
            const double ic_ = c.contains(x) ? 1.0 : 0.0;
            q += m.weight(x) * (ia_ - ic_) * (ib_ - ic_);
          }
          q *= 2.0;
          p.expect(gap == q, triple_json(m, a, b, c));
          p.expect((std::abs(gap) <= o.tol) == is_between(a, b, c), triple_json(m, a, b, c));
          const auto z = between_decomposition(a, b, c);
          if (is_between(a, b, c)) {
            const auto alg = set_algebra(a, b);
            p.expect(z.has_value(), triple_json(m, a, b, c));
            if (z) {
              const auto rebuilt = set_algebra(alg.set_intersection, *z).set_union;
              p.expect(rebuilt == c, triple_json(m, a, b, c));
              // The witness lives inside the symmetric difference.
              p.expect(set_algebra(*z, alg.sym_diff).set_union == alg.sym_diff,
                       triple_json(m, a, b, c));
            }
          } else {
            p.expect(!z.has_value(), triple_json(m, a, b, c));
          }
        }
      }
    }
  }
  return p.res;
}

PropertyResult crisp_sqrt_collapse(Rng& rng, const CheckOptions& o) {
  Prop p("crisp.sqrt_collapse");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = random_measure(rng, u);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<CrispSet> sets;
    for (std::uint64_t k = 0; k < count; ++k) sets.push_back(CrispSet::from_mask(u, k));
    for (std::uint64_t ia = 0; ia < count && p.ok(); ++ia) {
      for (std::uint64_t ib = 0; ib < count && p.ok(); ++ib) {
        for (std::uint64_t ic = 0; ic < count && p.ok(); ++ic) {
          const double s = sqrt_triangle_gap(m, sets[ia], sets[ib], sets[ic]);
          const bool endpoint = ic == ia || ic == ib;
          p.expect((std::abs(s) <= o.tol) == endpoint,
                   triple_json(m, sets[ia], sets[ib], sets[ic]));
          p.expect(s >= -o.tol, triple_json(m, sets[ia], sets[ib], sets[ic]));
        }
      }
    }
  }
  return p.res;
}

PropertyResult crisp_enumerate_matches_scan(Rng&, const CheckOptions& o) {
  Prop p("crisp.enumerate_matches_scan");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t ia = 0; ia < count && p.ok(); ++ia) {
      for (std::uint64_t ib = 0; ib < count && p.ok(); ++ib) {
        const auto a = CrispSet::from_mask(u, ia);
        const auto b = CrispSet::from_mask(u, ib);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t ic = 0; ic < count; ++ic) {
          if (is_between(a, b, CrispSet::from_mask(u, ic))) expected.push_back(ic);
        }
        std::vector<std::uint64_t> got;
        for (const auto& s : enumerate_between(a, b)) got.push_back(mask_of(s));
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        p.expect(got == expected,
                 json{{"universe", u->elements()}, {"A", ia}, {"B", ib}});
        p.expect(got.size() == (std::uint64_t{1} << set_algebra(a, b).sym_diff.cardinality()),
                 json{{"universe", u->elements()}, {"A", ia}, {"B", ib}});
      }
    }
  }
  // The combinatorial guard must hold: 25 differing elements exceed it.
  auto big = make_universe(25);
  bool threw = false;
  try {
    enumerate_between(CrispSet::empty(big), CrispSet::full(big));
  } catch (const Error& e) {
    threw = e.code() == errc::guard;
  }
  p.expect(threw, json{{"detail", "guard |A sym_diff B| <= 24 not enforced"}});
  return p.res;
}

PropertyResult crisp_indicator_identities(Rng&, const CheckOptions& o) {
  Prop p("crisp.indicator_identities");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t ia = 0; ia < count && p.ok(); ++ia) {
      for (std::uint64_t ib = 0; ib < count && p.ok(); ++ib) {
        const auto a = CrispSet::from_mask(u, ia);
        const auto b = CrispSet::from_mask(u, ib);
        const auto alg = set_algebra(a, b);
        bool good = true;
        for (std::size_t x = 0; x < a.size(); ++x) {
          const double fa = a.contains(x) ? 1.0 : 0.0;
          const double fb = b.contains(x) ? 1.0 : 0.0;
          const double fu = alg.set_union.contains(x) ? 1.0 : 0.0;
          const double fi = alg.set_intersection.contains(x) ? 1.0 : 0.0;
          const double fs = alg.sym_diff.contains(x) ? 1.0 : 0.0;
          const double fc = alg.complement_of_a.contains(x) ? 1.0 : 0.0;
          good = good && fu == fa + fb - fa * fb && fu == std::max(fa, fb);
          good = good && fi == fa * fb && fi == std::min(fa, fb);
          good = good && fs == fa + fb - 2.0 * fa * fb;
          good = good && fs == (fa - fb) * (fa - fb) && fs == fu - fi;
          good = good && fc == 1.0 - fa;
        }
        p.expect(good, json{{"universe", u->elements()}, {"A", ia}, {"B", ib}});
      }
    }
  }
  return p.res;
}

PropertyResult crisp_jaccard_triangle(Rng&, const CheckOptions& o) {
  Prop p("crisp.jaccard_triangle");
  for (int n = 1; n <= o.max_exhaustive; ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = WeightedMeasure::uniform(u);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<CrispSet> sets;
    for (std::uint64_t k = 0; k < count; ++k) sets.push_back(CrispSet::from_mask(u, k));
    for (std::uint64_t ia = 0; ia < count && p.ok(); ++ia) {
      for (std::uint64_t ib = 0; ib < count && p.ok(); ++ib) {
        const auto jab = jaccard(sets[ia], sets[ib]);
        p.expect(jab.distance == jaccard(sets[ib], sets[ia]).distance,
                 triple_json(m, sets[ia], sets[ib], sets[ib]));
        if (ia == ib && ia != 0) {
          p.expect(jab.distance == 0.0, triple_json(m, sets[ia], sets[ib], sets[ib]));
        }
        if (ia != ib) {
          p.expect(jab.distance > 0.0, triple_json(m, sets[ia], sets[ib], sets[ib]));
        }
        for (std::uint64_t ic = 0; ic < count && p.ok(); ++ic) {
          const double lhs = jab.distance;
          const double rhs =
              jaccard(sets[ia], sets[ic]).distance + jaccard(sets[ic], sets[ib]).distance;
          p.expect(lhs <= rhs + 1e-12, triple_json(m, sets[ia], sets[ib], sets[ic]));
        }
      }
    }
    // Convention: the empty pair has index 0, so its distance is 1.
    p.expect(jaccard(sets[0], sets[0]).distance == 1.0,
             json{{"detail", "distance(empty, empty) != 1"}});
  }
  return p.res;
}

// ---------------------------------------------------------------------------
// fuzzy suite

PropertyResult fuzzy_alpha_equals_pointwise(Rng&, const CheckOptions& o) {
  Prop p("fuzzy.alpha_equals_pointwise");
  const auto grid = grid_values(o.grid_levels);
  const int g = o.grid_levels;
  for (int n = 1; n <= std::min(o.max_exhaustive, 3); ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = WeightedMeasure::uniform(u);
    std::vector<int> digits(static_cast<std::size_t>(3 * n), 0);
    std::vector<double> vf(static_cast<std::size_t>(n)),
        vg(static_cast<std::size_t>(n)), vc(static_cast<std::size_t>(n));
    do {
      for (int i = 0; i < n; ++i) {
        vf[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
        vg[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(n + i)])];
        vc[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(2 * n + i)])];
      }
      const MembershipFn f(u, vf), gg(u, vg), c(u, vc);
      p.expect(is_alpha_between(f, gg, c) == is_pointwise_between(f, gg, c),
               fn_triple_json(m, f, gg, c));
      if (!p.ok()) break;
    } while (advance(digits, g));
  }
  return p.res;
}

PropertyResult fuzzy_metric_D_triangle_equality(Rng&, const CheckOptions& o) {
  Prop p("fuzzy.metric_D_triangle_equality");
  const auto grid = grid_values(o.grid_levels);
  const int g = o.grid_levels;
  const auto eta = LevelMeasure::lebesgue();
  for (int n = 1; n <= std::min(o.max_exhaustive, 2); ++n) {
    auto u = make_universe(static_cast<std::size_t>(n));
    const auto m = WeightedMeasure::uniform(u);
    std::vector<int> digits(static_cast<std::size_t>(3 * n), 0);
    std::vector<double> vf(static_cast<std::size_t>(n)),
        vg(static_cast<std::size_t>(n)), vc(static_cast<std::size_t>(n));
    do {
      for (int i = 0; i < n; ++i) {
        vf[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
        vg[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(n + i)])];
        vc[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(2 * n + i)])];
      }
      const MembershipFn f(u, vf), gg(u, vg), c(u, vc);
      const double gap = metric_D_triangle_gap(m, eta, f, gg, c);
      p.expect((std::abs(gap) <= o.tol) == is_pointwise_between(f, gg, c),
               fn_triple_json(m, f, gg, c));
      p.expect(gap >= -o.tol, fn_triple_json(m, f, gg, c));
      if (!p.ok()) break;
    } while (advance(digits, g));
  }
  return p.res;
}

PropertyResult fuzzy_layer_cake_l1(Rng& rng, const CheckOptions& o) {
  Prop p("fuzzy.layer_cake_l1");
  const auto eta = LevelMeasure::lebesgue();
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(6);
    auto u = make_universe(n);
    const auto m = random_measure(rng, u);
    const MembershipFn f(u, random_values(rng, n));
    const MembershipFn g(u, random_values(rng, n));
    const double d = metric_D(m, eta, f, g).value;
    double l1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) l1 += m.weight(i) * std::abs(f.at(i) - g.at(i));
    p.expect(std::abs(d - l1) <= 1e-12, fn_triple_json(m, f, g, g));
  }
  return p.res;
}

PropertyResult fuzzy_layer_cake_grid_oracle(Rng& rng, const CheckOptions& o) {
  Prop p("fuzzy.layer_cake_grid_oracle");
  const auto eta = LevelMeasure::lebesgue();
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(6);
    auto u = make_universe(n);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
      x = 0.5 + rng.unit();
      total += x;
    }
    for (auto& x : w) x /= total;  // unit total keeps the midpoint-rule error < 2e-4
    const WeightedMeasure m(u, std::move(w));
    const MembershipFn f(u, random_values(rng, n));
    const MembershipFn g(u, random_values(rng, n));
    const double d = metric_D(m, eta, f, g).value;
    const double oracle = metric_D_grid_oracle(m, f, g, 10000);
    p.expect(std::abs(d - oracle) <= 2e-4, fn_triple_json(m, f, g, g));
  }
  return p.res;
}

PropertyResult fuzzy_metric_D_axioms(Rng& rng, const CheckOptions& o) {
  Prop p("fuzzy.metric_D_axioms");
  const auto eta = LevelMeasure::lebesgue();
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(5);
    auto u = make_universe(n);
    const auto m = random_measure(rng, u);
    const MembershipFn f(u, random_values(rng, n));
    const MembershipFn g(u, random_values(rng, n));
    const MembershipFn c(u, random_values(rng, n));
    const double dfg = metric_D(m, eta, f, g).value;
    p.expect(dfg == metric_D(m, eta, g, f).value, fn_triple_json(m, f, g, c));
    p.expect(metric_D(m, eta, f, f).value == 0.0, fn_triple_json(m, f, g, c));
    if (!(f == g)) p.expect(dfg > 0.0, fn_triple_json(m, f, g, c));
    p.expect(dfg <= metric_D(m, eta, f, c).value + metric_D(m, eta, c, g).value + 1e-12,
             fn_triple_json(m, f, g, c));
  }
  // A discrete level measure that cannot separate a pair must say so.
  auto u = make_universe(1);
  const auto m = WeightedMeasure::uniform(u);
  const MembershipFn lo(u, {0.1});
  const MembershipFn hi(u, {0.2});
  const auto res = metric_D(m, LevelMeasure::discrete({{0.5, 1.0}}), lo, hi);
  p.expect(res.value == 0.0 && res.identity_warning,
           json{{"detail", "degenerate discrete level measure not flagged"}});
  const auto fine = metric_D(m, LevelMeasure::discrete({{0.15, 1.0}}), lo, hi);
  p.expect(fine.value == 1.0 && !fine.identity_warning,
           json{{"detail", "separating discrete level measure flagged or wrong"}});
  return p.res;
}

// Recovers t from c == t*f + (1-t)*g at some coordinate where f and g differ;
// empty when c is off the segment (or the recovery is inconsistent).
std::optional<double> segment_parameter(const MembershipFn& f, const MembershipFn& g,
                                        const MembershipFn& c, double tol) {
  std::optional<double> t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double den = f.at(i) - g.at(i);
    if (den == 0.0) {
      if (std::abs(c.at(i) - f.at(i)) > tol) return std::nullopt;
      continue;
    }
    const double ti = (c.at(i) - g.at(i)) / den;
    if (t && std::abs(*t - ti) > tol) return std::nullopt;
    if (!t) t = ti;
  }
  if (!t) return 0.0;  // f == g == c
  if (*t < -tol || *t > 1.0 + tol) return std::nullopt;
  return t;
}

PropertyResult fuzzy_strict_convexity_converse(Rng& rng, const CheckOptions& o) {
  Prop p("fuzzy.strict_convexity_converse");
  const long trials = trials_or(o, 500);
  for (double r : {2.0, 3.0}) {
    for (long t = 0; t < trials && p.ok(); ++t) {
      const std::size_t n = 2 + rng.index(4);
      auto u = make_universe(n);
      const auto m = random_measure(rng, u);
      auto fv = random_values(rng, n);
      auto gv = random_values(rng, n);
      // Full swing in the first two coordinates. The off-segment point built
      // below then sits at least 0.25 away from every segment point in the
      // second coordinate, which keeps its gap above a safe floor; an
      // unconditioned perturbation can be nearly collinear with an arbitrarily
      // small (though positive) gap.
      fv[0] = 1.0;
      gv[0] = 0.0;
      fv[1] = 1.0;
      gv[1] = 0.0;
      const MembershipFn f(u, std::move(fv));
      const MembershipFn g(u, std::move(gv));
      const double tau = 0.125 + 0.75 * rng.unit();
      const auto c = linear_between(f, g, tau);
      const double gap = d_r(m, f, c, r) + d_r(m, c, g, r) - d_r(m, f, g, r);
      // On the segment the triangle inequality is tight...
      p.expect(std::abs(gap) <= 1e-9, fn_triple_json(m, f, g, c));
      // ...and tightness identifies the segment point.
      p.expect(segment_parameter(f, g, c, 1e-7).has_value(), fn_triple_json(m, f, g, c));
      // Sliding the second coordinate off the diagonal keeps the point
      // pointwise between yet off the segment, so a strictly convex norm must
      // open a gap; the floor is conservative by more than an order of
      // magnitude for these coordinates and weights.
      auto vals = c.values();
      vals[1] = tau <= 0.5 ? tau + 0.25 : tau - 0.25;
      const MembershipFn off(u, std::move(vals));
      p.expect(!segment_parameter(f, g, off, 1e-7).has_value(), fn_triple_json(m, f, g, off));
      const double gap2 = d_r(m, f, off, r) + d_r(m, off, g, r) - d_r(m, f, g, r);
      p.expect(gap2 > 1e-4, fn_triple_json(m, f, g, off));
    }
  }
  return p.res;
}

PropertyResult fuzzy_linf_counterexample(Rng&, const CheckOptions&) {
  Prop p("fuzzy.linf_counterexample");
  auto u = make_universe(2);
  const auto m = WeightedMeasure::uniform(u);
  const MembershipFn v0(u, {0.0, 0.0});
  const MembershipFn v1(u, {1.0, 0.25});
  const MembershipFn w(u, {0.5, 0.25});
  const double duv = d_r(m, v0, v1, std::numeric_limits<double>::infinity());
  const double duw = d_r(m, v0, w, std::numeric_limits<double>::infinity());
  const double dwv = d_r(m, w, v1, std::numeric_limits<double>::infinity());
  p.expect(std::abs(duv - 1.0) <= 1e-15, json{{"duv", duv}});
  p.expect(std::abs(duw - 0.5) <= 1e-15, json{{"duw", duw}});
  p.expect(std::abs(dwv - 0.5) <= 1e-15, json{{"dwv", dwv}});
  // Additivity holds in the sup norm although w is off the segment [u,v]:
  p.expect(std::abs(duv - (duw + dwv)) <= 1e-15, json{{"gap", duv - duw - dwv}});
  p.expect(!segment_parameter(v0, v1, w, 1e-7).has_value(),
           json{{"detail", "w unexpectedly lies on the segment"}});
  p.expect(is_pointwise_between(v0, v1, w), json{{"detail", "w should be pointwise between"}});
  return p.res;
}

PropertyResult fuzzy_cut_nesting(Rng& rng, const CheckOptions& o) {
  Prop p("fuzzy.cut_nesting");
  const long trials = trials_or(o, 500);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(6);
    auto u = make_universe(n);
    const MembershipFn f(u, random_values(rng, n));
    double a = rng.dyadic_unit();
    double b = rng.dyadic_unit();
    if (a > b) std::swap(a, b);
    const auto cut_a = strong_alpha_cut(f, a);
    const auto cut_b = strong_alpha_cut(f, b);
    bool nested = true;
    for (std::size_t i = 0; i < n; ++i) nested = nested && (!cut_b.contains(i) || cut_a.contains(i));
    p.expect(nested, json{{"f", f.values()}, {"alpha", a}, {"beta", b}});
    p.expect(strong_alpha_cut(f, 1.0).cardinality() == 0, json{{"f", f.values()}});
  }
  return p.res;
}

// ---------------------------------------------------------------------------
// hyper suite

bool on_straight_segment(Hyperbolic lo, Hyperbolic hi, Hyperbolic v) {
  const double dp = hi.plus() - lo.plus();
  const double dm = hi.minus() - lo.minus();
  std::optional<double> t;
  if (dp != 0.0) {
    t = (v.plus() - lo.plus()) / dp;
  } else if (v.plus() != lo.plus()) {
    return false;
  }
  if (dm != 0.0) {
    const double t2 = (v.minus() - lo.minus()) / dm;
    if (t && std::abs(*t - t2) > 1e-12) return false;
    if (!t) t = t2;
  } else if (v.minus() != lo.minus()) {
    return false;
  }
  if (!t) return true;
  return *t >= -1e-12 && *t <= 1.0 + 1e-12;
}

PropertyResult hyper_lattice_example(Rng&, const CheckOptions&) {
  Prop p("hyper.lattice_example");
  const auto z = Hyperbolic::from_idempotent(1.0, 2.0);
  const auto w = Hyperbolic::from_idempotent(3.0, 0.0);
  p.expect(z == Hyperbolic(1.5, -0.5), h_json(z));
  const auto mj = h_meet_join(z, w);
  p.expect(mj.meet == Hyperbolic::from_idempotent(1.0, 0.0), h_json(mj.meet));
  p.expect(mj.join == Hyperbolic::from_idempotent(3.0, 2.0), h_json(mj.join));
  p.expect(h_partial_cmp(z, w) == HOrder::incomparable, h_json(z));
  p.expect(h_partial_cmp(mj.meet, z) == HOrder::less_equal, h_json(mj.meet));
  p.expect(h_partial_cmp(z, z) == HOrder::equal, h_json(z));

  const auto u = Hyperbolic::from_idempotent(2.0, 0.0);
  const auto v = Hyperbolic::from_idempotent(5.0, 0.5);
  p.expect(h_interval_contains(z, w, u), h_json(u));
  p.expect(h_interval_contains(u, v, w), h_json(w));
  // Betweenness fails to chain: u sits between z and w, and w between u and v,
  // yet u is not between z and v.
  p.expect(!h_interval_contains(z, v, u), h_json(u));
  // The order interval is a box, not the straight segment.
  p.expect(!on_straight_segment(mj.meet, mj.join, u), h_json(u));
  p.expect(!on_straight_segment(mj.meet, mj.join, z), h_json(z));
  p.expect(on_straight_segment(mj.meet, mj.join, mj.meet), h_json(mj.meet));
  p.expect(on_straight_segment(mj.meet, mj.join, mj.join), h_json(mj.join));

  const auto inv = h_inverse(z);
  p.expect(inv.has_value() && *inv == Hyperbolic(0.75, 0.25), h_json(z));
  p.expect(!h_inverse(Hyperbolic(1.0, 1.0)).has_value(), h_json(Hyperbolic(1.0, 1.0)));
  p.expect(!h_inverse(Hyperbolic(0.0, 0.0)).has_value(), h_json(Hyperbolic(0.0, 0.0)));
  p.expect(!in_D(z), h_json(z));
  p.expect(in_D(Hyperbolic(0.5, 0.25)), h_json(Hyperbolic(0.5, 0.25)));
  return p.res;
}

Hyperbolic random_h(Rng& rng) {
  return Hyperbolic(rng.dyadic_range(-4.0, 4.0), rng.dyadic_range(-4.0, 4.0));
}

PropertyResult hyper_lattice_laws(Rng& rng, const CheckOptions& o) {
  Prop p("hyper.lattice_laws");
  const long trials = trials_or(o, 10000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const auto z = random_h(rng);
    const auto w = random_h(rng);
    const auto v = random_h(rng);
    const auto zw = h_meet_join(z, w);
    const auto wz = h_meet_join(w, z);
    const json ce{{"z", h_json(z)}, {"w", h_json(w)}, {"v", h_json(v)}};
    p.expect(zw.meet == wz.meet && zw.join == wz.join, ce);
    p.expect(h_meet_join(z, z).meet == z && h_meet_join(z, z).join == z, ce);
    const auto a1 = h_meet_join(h_meet_join(z, w).meet, v).meet;
    const auto a2 = h_meet_join(z, h_meet_join(w, v).meet).meet;
    p.expect(a1 == a2, ce);
    const auto j1 = h_meet_join(h_meet_join(z, w).join, v).join;
    const auto j2 = h_meet_join(z, h_meet_join(w, v).join).join;
    p.expect(j1 == j2, ce);
    p.expect(h_meet_join(z, zw.join).meet == z, ce);  // absorption
    p.expect(h_meet_join(z, zw.meet).join == z, ce);
  }
  return p.res;
}

PropertyResult hyper_bound_consistency(Rng& rng, const CheckOptions& o) {
  Prop p("hyper.bound_consistency");
  const long trials = trials_or(o, 10000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const auto z = random_h(rng);
    const auto w = random_h(rng);
    const auto mj = h_meet_join(z, w);
    const auto m = Hyperbolic::from_idempotent(mj.meet.plus() - rng.dyadic_range(0.0, 4.0),
                                               mj.meet.minus() - rng.dyadic_range(0.0, 4.0));
    const auto M = Hyperbolic::from_idempotent(mj.join.plus() + rng.dyadic_range(0.0, 4.0),
                                               mj.join.minus() + rng.dyadic_range(0.0, 4.0));
    const json ce{{"z", h_json(z)}, {"w", h_json(w)}, {"m", h_json(m)}, {"M", h_json(M)}};
    p.expect(h_leq(m, z) && h_leq(m, w) && h_leq(z, M) && h_leq(w, M), ce);
    p.expect(h_leq(m, mj.meet) && h_leq(mj.join, M), ce);
    p.expect(h_leq(mj.meet, mj.join), ce);
  }
  return p.res;
}

PropertyResult hyper_projections(Rng& rng, const CheckOptions& o) {
  Prop p("hyper.projections");
  auto close = [](const Mat2& x, const Mat2& y, double tol) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (std::abs(x.e[i][j] - y.e[i][j]) > tol) return false;
      }
    }
    return true;
  };
  const Mat2 identity{{{1.0, 0.0}, {0.0, 1.0}}};
  const Mat2 zero{{{0.0, 0.0}, {0.0, 0.0}}};
  p.expect(close(kProjP * kProjP, kProjP, 1e-15), json{{"detail", "P*P != P"}});
  p.expect(close(kProjQ * kProjQ, kProjQ, 1e-15), json{{"detail", "Q*Q != Q"}});
  p.expect(close(kProjP * kProjQ, zero, 1e-15), json{{"detail", "P*Q != 0"}});
  p.expect(close(kProjQ * kProjP, zero, 1e-15), json{{"detail", "Q*P != 0"}});
  p.expect(close(kProjP + kProjQ, identity, 1e-15), json{{"detail", "P+Q != I"}});
  const long trials = trials_or(o, 10000);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Mat2 U{{{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}}};
  for (long t = 0; t < trials && p.ok(); ++t) {
    const auto z = random_h(rng);
    const Mat2 split = z.plus() * kProjP + z.minus() * kProjQ;
    p.expect(close(z.matrix(), split, 1e-15), h_json(z));
    const Mat2 diag{{{z.plus(), 0.0}, {0.0, z.minus()}}};
    p.expect(close(z.matrix(), U * diag * U, 1e-12), h_json(z));
  }
  return p.res;
}

PropertyResult hyper_idempotent_roundtrip(Rng& rng, const CheckOptions& o) {
  Prop p("hyper.idempotent_roundtrip");
  const long trials = trials_or(o, 10000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const auto z = random_h(rng);
    p.expect(Hyperbolic::from_idempotent(z.plus(), z.minus()) == z, h_json(z));
    const double plus = rng.dyadic_range(-4.0, 4.0);
    const double minus = rng.dyadic_range(-4.0, 4.0);
    const auto back = Hyperbolic::from_idempotent(plus, minus);
    p.expect(back.plus() == plus && back.minus() == minus,
             json{{"plus", plus}, {"minus", minus}});
    const auto mat = z.matrix();
    p.expect(mat.e[0][0] == z.a() && mat.e[0][1] == z.b() && mat.e[1][0] == z.b() &&
                 mat.e[1][1] == z.a(),
             h_json(z));
  }
  return p.res;
}

PropertyResult hyper_inverse_group_law(Rng& rng, const CheckOptions& o) {
  Prop p("hyper.inverse_group_law");
  const long trials = trials_or(o, 10000);
  const Hyperbolic unit(1.0, 0.0);
  for (long t = 0; t < trials && p.ok(); ++t) {
    // Keep both idempotent components off zero so the inverse exists.
    double plus = rng.dyadic_range(0.25, 4.0);
    double minus = rng.dyadic_range(0.25, 4.0);
    if (rng.bits() & 1) plus = -plus;
    if (rng.bits() & 1) minus = -minus;
    const auto z = Hyperbolic::from_idempotent(plus, minus);
    const auto inv = h_inverse(z);
    p.expect(inv.has_value(), h_json(z));
    if (!inv) continue;
    const auto prod = z * *inv;
    p.expect(std::abs(prod.a() - unit.a()) <= 1e-9 && std::abs(prod.b() - unit.b()) <= 1e-9,
             h_json(z));
    const auto back = h_inverse(*inv);
    p.expect(back.has_value(), h_json(z));
    if (back) {
      p.expect(std::abs(back->a() - z.a()) <= 1e-9 && std::abs(back->b() - z.b()) <= 1e-9,
               h_json(z));
    }
  }
  // Null-cone values have no inverse.
  p.expect(!h_inverse(Hyperbolic(2.5, 2.5)).has_value(), h_json(Hyperbolic(2.5, 2.5)));
  p.expect(!h_inverse(Hyperbolic(-1.75, 1.75)).has_value(), h_json(Hyperbolic(-1.75, 1.75)));
  return p.res;
}

// ---------------------------------------------------------------------------
// hfuzzy suite

HMembershipFn random_hmf(Rng& rng, const UniversePtr& u) {
  return HMembershipFn(MembershipFn(u, random_values(rng, u->size())),
                       MembershipFn(u, random_values(rng, u->size())));
}

json hmf_json(const HMembershipFn& m) {
  return json{{"mu1", m.mu1().values()}, {"mu2", m.mu2().values()}};
}

PropertyResult hfuzzy_componentwise_ops(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.componentwise_ops");
  const auto eta = LevelMeasure::lebesgue();
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(5);
    auto u = make_universe(n);
    const auto m = random_measure(rng, u);
    const auto A = random_hmf(rng, u);
    const auto B = random_hmf(rng, u);
    const auto C = random_hmf(rng, u);
    const json ce{{"A", hmf_json(A)}, {"B", hmf_json(B)}, {"C", hmf_json(C)}};

    const auto ops1 = pointwise_ops(A.mu1(), B.mu1());
    const auto ops2 = pointwise_ops(A.mu2(), B.mu2());
    p.expect(h_product(A, B) == h_from_pair(ops1.product, ops2.product), ce);
    const auto jm = h_join_meet(A, B);
    p.expect(jm.join == h_from_pair(ops1.join, ops2.join), ce);
    p.expect(jm.meet == h_from_pair(ops1.meet, ops2.meet), ce);
    p.expect(h_complement(A) ==
                 h_from_pair(pointwise_ops(A.mu1(), A.mu1()).complement_of_f,
                             pointwise_ops(A.mu2(), A.mu2()).complement_of_f),
             ce);

    p.expect(h_is_between(A, B, C) == (is_pointwise_between(A.mu1(), B.mu1(), C.mu1()) &&
                                       is_pointwise_between(A.mu2(), B.mu2(), C.mu2())),
             ce);
    // The pointwise hyperbolic-order reading agrees (dyadic values, so the
    // value view is exact).
    bool orderwise = true;
    for (std::size_t i = 0; i < n; ++i) {
      orderwise = orderwise && h_interval_contains(A.value_at(i), B.value_at(i), C.value_at(i));
    }
    p.expect(h_is_between(A, B, C) == orderwise, ce);

    const auto dH = h_metric_D(m, eta, A, B);
    p.expect(dH.value.plus() == metric_D(m, eta, A.mu1(), B.mu1()).value &&
                 dH.value.minus() == metric_D(m, eta, A.mu2(), B.mu2()).value,
             ce);

    const auto wit = h_witness_decomposition(A, B, C);
    if (h_is_between(A, B, C)) {
      p.expect(wit.has_value(), ce);
      if (wit) {
        p.expect(wit->mu1() == *witness_decomposition(A.mu1(), B.mu1(), C.mu1()) &&
                     wit->mu2() == *witness_decomposition(A.mu2(), B.mu2(), C.mu2()),
                 ce);
      }
    } else {
      p.expect(!wit.has_value(), ce);
    }

    const auto [c1, c2] = h_components(A);
    p.expect(h_from_pair(c1, c2) == A, ce);
  }
  return p.res;
}

PropertyResult hfuzzy_sandwich(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.sandwich");
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(5);
    auto u = make_universe(n);
    const auto A = random_hmf(rng, u);
    const auto B = random_hmf(rng, u);
    const auto jm = h_join_meet(A, B);
    const json ce{{"A", hmf_json(A)}, {"B", hmf_json(B)}};
    p.expect(h_is_between(A, B, jm.meet), ce);
    p.expect(h_is_between(A, B, jm.join), ce);
    p.expect(h_is_between(A, B, A) && h_is_between(A, B, B), ce);

    // A mixed function drawn inside the componentwise envelope is between,
    // and the witness reconstructs it exactly.
    std::vector<double> c1(n), c2(n);
    for (std::size_t i = 0; i < n; ++i) {
      c1[i] = rng.bits() & 1 ? A.mu1().at(i) : B.mu1().at(i);
      c2[i] = rng.bits() & 1 ? jm.meet.mu2().at(i) : jm.join.mu2().at(i);
    }
    const HMembershipFn C(MembershipFn(u, c1), MembershipFn(u, c2));
    p.expect(h_is_between(A, B, C), json{{"A", hmf_json(A)}, {"B", hmf_json(B)}, {"C", hmf_json(C)}});
    const auto wit = h_witness_decomposition(A, B, C);
    p.expect(wit.has_value(), ce);
    if (wit) {
      bool exact = true;
      for (std::size_t i = 0; i < n; ++i) {
        exact = exact && jm.meet.mu1().at(i) + wit->mu1().at(i) == C.mu1().at(i);
        exact = exact && jm.meet.mu2().at(i) + wit->mu2().at(i) == C.mu2().at(i);
      }
      p.expect(exact, json{{"A", hmf_json(A)}, {"B", hmf_json(B)}, {"C", hmf_json(C)}});
    }
  }
  return p.res;
}

PropertyResult hfuzzy_atanassov_product(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.atanassov_product");
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(5);
    auto u = make_universe(n);
    auto atanassov = [&] {
      std::vector<double> v1(n), v2(n);
      for (std::size_t i = 0; i < n; ++i) {
        v1[i] = rng.dyadic_unit();
        v2[i] = v1[i] * rng.dyadic_unit();
      }
      return HMembershipFn(MembershipFn(u, std::move(v1)), MembershipFn(u, std::move(v2)));
    };
    const auto A = atanassov();
    const auto B = atanassov();
    const json ce{{"A", hmf_json(A)}, {"B", hmf_json(B)}};
    p.expect(is_atanassov(A) && is_atanassov(B), ce);
    p.expect(is_atanassov(h_product(A, B)), ce);
    const auto jm = h_join_meet(A, B);
    p.expect(is_atanassov(jm.join) && is_atanassov(jm.meet), ce);
  }
  // Exhaustive closure over the 3-level grid, |X| = 2.
  auto u = make_universe(2);
  const double grid[] = {0.0, 0.5, 1.0};
  std::vector<HMembershipFn> all;
  for (int a0 = 0; a0 < 3; ++a0)
    for (int b0 = 0; b0 <= a0; ++b0)
      for (int a1 = 0; a1 < 3; ++a1)
        for (int b1 = 0; b1 <= a1; ++b1)
          all.push_back(HMembershipFn(MembershipFn(u, {grid[a0], grid[a1]}),
                                      MembershipFn(u, {grid[b0], grid[b1]})));
  for (const auto& A : all) {
    for (const auto& B : all) {
      if (!p.ok()) break;
      p.expect(is_atanassov(h_product(A, B)),
               json{{"A", hmf_json(A)}, {"B", hmf_json(B)}});
    }
  }
  return p.res;
}

PropertyResult hfuzzy_alpha_cut_consistency(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.alpha_cut_consistency");
  const long trials = trials_or(o, 1000);
  for (long t = 0; t < trials && p.ok(); ++t) {
    const std::size_t n = 1 + rng.index(5);
    auto u = make_universe(n);
    const auto M = random_hmf(rng, u);
    const double t1 = rng.dyadic_unit();
    const double t2 = rng.dyadic_unit();
    const HLevel level((t1 + t2) / 2.0, (t1 - t2) / 2.0);
    const json ce{{"M", hmf_json(M)}, {"t1", t1}, {"t2", t2}};
    p.expect(level.threshold1() == t1 && level.threshold2() == t2, ce);
    const auto cut = h_alpha_cut(M, level);
    const auto expected =
        set_algebra(strong_alpha_cut(M.mu1(), t1), strong_alpha_cut(M.mu2(), t2))
            .set_intersection;
    p.expect(cut == expected, ce);
    // Raising both thresholds shrinks the cut.
    const double s1 = t1 + (1.0 - t1) * rng.dyadic_unit();
    const double s2 = t2 + (1.0 - t2) * rng.dyadic_unit();
    const auto higher = h_alpha_cut(M, HLevel((s1 + s2) / 2.0, (s1 - s2) / 2.0));
    bool nested = true;
    for (std::size_t i = 0; i < n; ++i) nested = nested && (!higher.contains(i) || cut.contains(i));
    p.expect(nested, ce);
  }
  bool threw = false;
  try {
    [[maybe_unused]] HLevel bad(0.9, 0.5);  // thresholds 1.4 and 0.4
  } catch (const Error& e) {
    threw = e.code() == errc::domain;
  }
  p.expect(threw, json{{"detail", "HLevel outside the membership region accepted"}});
  return p.res;
}

// Per-component scan table for the exhaustive hyperbolic-level properties:
// every component triple (f, g, c) over the value grid, with its pointwise
// verdict, level-cut verdict, and triangle gap.
struct ComponentTriples {
  std::vector<std::uint8_t> pointwise;
  std::vector<std::uint8_t> levelwise;
  std::vector<double> gap;
  std::size_t n = 0;
  int g = 0;
  std::vector<double> grid;
};

ComponentTriples component_table(std::size_t n, int g) {
  ComponentTriples tab;
  tab.n = n;
  tab.g = g;
  tab.grid = grid_values(g);
  auto u = make_universe(n);
  const auto m = WeightedMeasure::uniform(u);
  const auto eta = LevelMeasure::lebesgue();
  std::vector<int> digits(3 * n, 0);
  std::vector<double> vf(n), vg(n), vc(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      vf[i] = tab.grid[static_cast<std::size_t>(digits[i])];
      vg[i] = tab.grid[static_cast<std::size_t>(digits[n + i])];
      vc[i] = tab.grid[static_cast<std::size_t>(digits[2 * n + i])];
    }
    const MembershipFn f(u, vf), gg(u, vg), c(u, vc);
    tab.pointwise.push_back(is_pointwise_between(f, gg, c) ? 1 : 0);
    tab.levelwise.push_back(is_alpha_between(f, gg, c) ? 1 : 0);
    tab.gap.push_back(metric_D_triangle_gap(m, eta, f, gg, c));
  } while (advance(digits, g));
  return tab;
}

json decode_h_triple(const ComponentTriples& tab, std::size_t i1, std::size_t i2) {
  auto decode = [&](std::size_t idx) {
    std::vector<std::vector<double>> fns(3, std::vector<double>(tab.n));
    for (std::size_t d = 0; d < 3 * tab.n; ++d) {
      fns[d / tab.n][d % tab.n] = tab.grid[idx % static_cast<std::size_t>(tab.g)];
      idx /= static_cast<std::size_t>(tab.g);
    }
    return fns;
  };
  const auto comp1 = decode(i1);
  const auto comp2 = decode(i2);
  return json{{"A", {{"mu1", comp1[0]}, {"mu2", comp2[0]}}},
              {"B", {{"mu1", comp1[1]}, {"mu2", comp2[1]}}},
              {"C", {{"mu1", comp1[2]}, {"mu2", comp2[2]}}}};
}

// Rebuilds the h-valued triple for a pair of table indices, for spot checks
// through the real operations.
struct HTriple {
  HMembershipFn A, B, C;
};

HTriple materialize(const ComponentTriples& tab, const UniversePtr& u, std::size_t i1,
                    std::size_t i2) {
  auto decode = [&](std::size_t idx) {
    std::vector<std::vector<double>> fns(3, std::vector<double>(tab.n));
    for (std::size_t d = 0; d < 3 * tab.n; ++d) {
      fns[d / tab.n][d % tab.n] = tab.grid[idx % static_cast<std::size_t>(tab.g)];
      idx /= static_cast<std::size_t>(tab.g);
    }
    return fns;
  };
  const auto c1 = decode(i1);
  const auto c2 = decode(i2);
  return {HMembershipFn(MembershipFn(u, c1[0]), MembershipFn(u, c2[0])),
          HMembershipFn(MembershipFn(u, c1[1]), MembershipFn(u, c2[1])),
          HMembershipFn(MembershipFn(u, c1[2]), MembershipFn(u, c2[2]))};
}

PropertyResult hfuzzy_a_between_equals_pointwise(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.a_between_equals_pointwise");
  for (int nn = 1; nn <= std::min(o.max_exhaustive, 2); ++nn) {
    const auto n = static_cast<std::size_t>(nn);
    const auto tab = component_table(n, o.grid_levels);
    const std::size_t total = tab.pointwise.size();
    // The level thresholds act on the two components independently, so the
    // h-valued verdicts factorize over the component-triple table; scan all
    // pairs through the factorized form.
    for (std::size_t i1 = 0; i1 < total && p.ok(); ++i1) {
      const bool pw1 = tab.pointwise[i1] != 0;
      const bool al1 = tab.levelwise[i1] != 0;
      for (std::size_t i2 = 0; i2 < total; ++i2) {
        const bool h_pointwise = pw1 && tab.pointwise[i2] != 0;
        const bool h_levelwise = al1 && tab.levelwise[i2] != 0;
        if (h_pointwise != h_levelwise) {
          p.fail(decode_h_triple(tab, i1, i2));
          break;
        }
        ++p.res.cases;
      }
    }
    // Spot-check the factorization against the real operations.
    auto u = make_universe(n);
    const long samples = std::min<long>(2000, static_cast<long>(total));
    for (long s = 0; s < samples && p.ok(); ++s) {
      const std::size_t i1 = rng.index(total);
      const std::size_t i2 = rng.index(total);
      const auto triple = materialize(tab, u, i1, i2);
      const bool direct_h = h_is_between(triple.A, triple.B, triple.C);
      const bool direct_a = h_is_a_between(triple.A, triple.B, triple.C);
      p.expect(direct_h == (tab.pointwise[i1] && tab.pointwise[i2]),
               decode_h_triple(tab, i1, i2));
      p.expect(direct_a == (tab.levelwise[i1] && tab.levelwise[i2]),
               decode_h_triple(tab, i1, i2));
      p.expect(direct_a == direct_h, decode_h_triple(tab, i1, i2));
    }
  }
  return p.res;
}

PropertyResult hfuzzy_hyperbolic_triangle_equality(Rng& rng, const CheckOptions& o) {
  Prop p("hfuzzy.hyperbolic_triangle_equality");
  for (int nn = 1; nn <= std::min(o.max_exhaustive, 2); ++nn) {
    const auto n = static_cast<std::size_t>(nn);
    const auto tab = component_table(n, o.grid_levels);
    const std::size_t total = tab.pointwise.size();
    for (std::size_t i1 = 0; i1 < total && p.ok(); ++i1) {
      const bool pw1 = tab.pointwise[i1] != 0;
      const bool zero1 = std::abs(tab.gap[i1]) <= o.tol;
      for (std::size_t i2 = 0; i2 < total; ++i2) {
        const bool h_pointwise = pw1 && tab.pointwise[i2] != 0;
        const bool gap_zero = zero1 && std::abs(tab.gap[i2]) <= o.tol;
        if (h_pointwise != gap_zero) {
          p.fail(decode_h_triple(tab, i1, i2));
          break;
        }
        ++p.res.cases;
      }
    }
    auto u = make_universe(n);
    const auto m = WeightedMeasure::uniform(u);
    const auto eta = LevelMeasure::lebesgue();
    const long samples = std::min<long>(1000, static_cast<long>(total));
    for (long s = 0; s < samples && p.ok(); ++s) {
      const std::size_t i1 = rng.index(total);
      const std::size_t i2 = rng.index(total);
      const auto triple = materialize(tab, u, i1, i2);
      const auto gap = h_metric_D(m, eta, triple.A, triple.C).value +
                       h_metric_D(m, eta, triple.C, triple.B).value -
                       h_metric_D(m, eta, triple.A, triple.B).value;
      p.expect(gap.plus() == tab.gap[i1] && gap.minus() == tab.gap[i2],
               decode_h_triple(tab, i1, i2));
      const bool zero = std::abs(gap.plus()) <= o.tol && std::abs(gap.minus()) <= o.tol;
      p.expect(zero == h_is_between(triple.A, triple.B, triple.C),
               decode_h_triple(tab, i1, i2));
    }
  }
  return p.res;
}

// ---------------------------------------------------------------------------

using PropertyFn = PropertyResult (*)(Rng&, const CheckOptions&);

struct SuiteDef {
  const char* name;
  std::vector<PropertyFn> properties;
};

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {
      {"crisp",
       {crisp_dsigma_metric_axioms, crisp_triangle_equality_betweenness, crisp_sqrt_collapse,
        crisp_enumerate_matches_scan, crisp_indicator_identities, crisp_jaccard_triangle}},
      {"fuzzy",
       {fuzzy_alpha_equals_pointwise, fuzzy_metric_D_triangle_equality, fuzzy_layer_cake_l1,
        fuzzy_layer_cake_grid_oracle, fuzzy_metric_D_axioms, fuzzy_strict_convexity_converse,
        fuzzy_linf_counterexample, fuzzy_cut_nesting}},
      {"hyper",
       {hyper_lattice_example, hyper_lattice_laws, hyper_bound_consistency, hyper_projections,
        hyper_idempotent_roundtrip, hyper_inverse_group_law}},
      {"hfuzzy",
       {hfuzzy_componentwise_ops, hfuzzy_sandwich, hfuzzy_atanassov_product,
        hfuzzy_alpha_cut_consistency, hfuzzy_a_between_equals_pointwise,
        hfuzzy_hyperbolic_triangle_equality}},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : suite_defs()) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& suites,
                                    const CheckOptions& options) {
  if (options.max_exhaustive < 1 || options.max_exhaustive > 4) {
    throw Error(errc::guard, "check: exhaustive universe size must be in [1,4]");
  }
  if (options.grid_levels < 2 || options.grid_levels > 5) {
    throw Error(errc::guard, "check: grid levels must be in [2,5]");
  }
  if (options.trials && *options.trials < 1) {
    throw Error(errc::guard, "check: trials must be >= 1");
  }
  std::vector<const SuiteDef*> selected;
  for (const auto& name : suites) {
    const SuiteDef* found = nullptr;
    for (const auto& def : suite_defs()) {
      if (name == def.name) {
        found = &def;
        break;
      }
    }
    if (!found) throw Error(errc::unknown_label, "check: unknown suite '" + name + "'");
    selected.push_back(found);
  }
  Rng rng(options.seed);
  std::vector<SuiteResult> results;
  for (const auto* def : selected) {
    SuiteResult sr;
    sr.suite = def->name;
    for (const auto& fn : def->properties) {
      auto pr = fn(rng, options);
      sr.passed = sr.passed && pr.passed;
      sr.properties.push_back(std::move(pr));
    }
    results.push_back(std::move(sr));
  }
  return results;
}

double metric_D_grid_oracle(const WeightedMeasure& m, const MembershipFn& f,
                            const MembershipFn& g, int levels) {
  if (levels < 1) throw Error(errc::domain, "grid oracle: need at least one level");
  double total = 0.0;
  const double h = 1.0 / static_cast<double>(levels);
  for (int k = 0; k < levels; ++k) {
    const double alpha = (static_cast<double>(k) + 0.5) * h;
    double slice = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if ((f.at(i) > alpha) != (g.at(i) > alpha)) slice += m.weight(i);
    }
    total += h * slice;
  }
  return total;
}

}  // namespace fuzzbet::checks
