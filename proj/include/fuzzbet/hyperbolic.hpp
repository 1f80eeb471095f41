#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

namespace fuzzbet {

// 2x2 symmetric helper for the matrix view of hyperbolic numbers.
struct Mat2 {
  double e[2][2];

  friend constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {{{x.e[0][0] + y.e[0][0], x.e[0][1] + y.e[0][1]},
             {x.e[1][0] + y.e[1][0], x.e[1][1] + y.e[1][1]}}};
  }
  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {{{x.e[0][0] * y.e[0][0] + x.e[0][1] * y.e[1][0],
              x.e[0][0] * y.e[0][1] + x.e[0][1] * y.e[1][1]},
             {x.e[1][0] * y.e[0][0] + x.e[1][1] * y.e[1][0],
              x.e[1][0] * y.e[0][1] + x.e[1][1] * y.e[1][1]}}};
  }
  friend constexpr Mat2 operator*(double s, const Mat2& x) {
    return {{{s * x.e[0][0], s * x.e[0][1]}, {s * x.e[1][0], s * x.e[1][1]}}};
  }
};

// Hyperbolic (split-complex) number a + b·j with j² = 1, stored as (a,b).
// Matrix view [[a,b],[b,a]]; idempotent components plus = a+b, minus = a-b
// along the projections P = (1/2)[[1,1],[1,1]] and Q = (1/2)[[1,-1],[-1,1]].
class Hyperbolic {
public:
  constexpr Hyperbolic() : a_(0.0), b_(0.0) {}
  constexpr Hyperbolic(double a, double b) : a_(a), b_(b) {}

  static constexpr Hyperbolic from_idempotent(double plus, double minus) {
    return Hyperbolic((plus + minus) / 2.0, (plus - minus) / 2.0);
  }

  constexpr double a() const { return a_; }
  constexpr double b() const { return b_; }
  constexpr double plus() const { return a_ + b_; }
  constexpr double minus() const { return a_ - b_; }

  constexpr Mat2 matrix() const { return {{{a_, b_}, {b_, a_}}}; }

  friend constexpr Hyperbolic operator+(Hyperbolic z, Hyperbolic w) {
    return Hyperbolic(z.a_ + w.a_, z.b_ + w.b_);
  }
  friend constexpr Hyperbolic operator-(Hyperbolic z, Hyperbolic w) {
    return Hyperbolic(z.a_ - w.a_, z.b_ - w.b_);
  }
  friend constexpr Hyperbolic operator-(Hyperbolic z) { return Hyperbolic(-z.a_, -z.b_); }
  friend constexpr Hyperbolic operator*(Hyperbolic z, Hyperbolic w) {
    return Hyperbolic(z.a_ * w.a_ + z.b_ * w.b_, z.a_ * w.b_ + z.b_ * w.a_);
  }
  friend constexpr Hyperbolic operator*(double s, Hyperbolic z) {
    return Hyperbolic(s * z.a_, s * z.b_);
  }
  friend constexpr bool operator==(Hyperbolic z, Hyperbolic w) {
    return z.a_ == w.a_ && z.b_ == w.b_;
  }

private:
  double a_;
  double b_;
};

inline constexpr Mat2 kProjP = {{{0.5, 0.5}, {0.5, 0.5}}};
inline constexpr Mat2 kProjQ = {{{0.5, -0.5}, {-0.5, 0.5}}};

// Multiplicative inverse (a,-b)/(a²-b²); empty on (or numerically near) the
// null cone |a| == |b|, where no inverse exists.
inline std::optional<Hyperbolic> h_inverse(Hyperbolic z) {
  const double det = z.a() * z.a() - z.b() * z.b();
  const double scale = std::max(1.0, z.a() * z.a() + z.b() * z.b());
  if (std::abs(det) <= 1e-12 * scale) return std::nullopt;
  return Hyperbolic(z.a() / det, -z.b() / det);
}

// Componentwise partial order on the idempotent components.
enum class HOrder { equal, less_equal, greater_equal, incomparable };

inline constexpr bool h_leq(Hyperbolic z, Hyperbolic w) {
  return z.plus() <= w.plus() && z.minus() <= w.minus();
}

inline constexpr HOrder h_partial_cmp(Hyperbolic z, Hyperbolic w) {
  const bool le = h_leq(z, w);
  const bool ge = h_leq(w, z);
  if (le && ge) return HOrder::equal;
  if (le) return HOrder::less_equal;
  if (ge) return HOrder::greater_equal;
  return HOrder::incomparable;
}

struct MeetJoin {
  Hyperbolic meet;
  Hyperbolic join;
};

inline constexpr MeetJoin h_meet_join(Hyperbolic z, Hyperbolic w) {
  const double pl = z.plus() < w.plus() ? z.plus() : w.plus();
  const double ph = z.plus() < w.plus() ? w.plus() : z.plus();
  const double ml = z.minus() < w.minus() ? z.minus() : w.minus();
  const double mh = z.minus() < w.minus() ? w.minus() : z.minus();
  return {Hyperbolic::from_idempotent(pl, ml), Hyperbolic::from_idempotent(ph, mh)};
}

// Membership-value region: both idempotent components in [0,1].
inline constexpr bool in_D(Hyperbolic z) {
  return 0.0 <= z.plus() && z.plus() <= 1.0 && 0.0 <= z.minus() && z.minus() <= 1.0;
}

// Order interval [z∧w, z∨w]; betweenness here is not transitive.
class HInterval {
public:
  HInterval(Hyperbolic z, Hyperbolic w) {
    const auto mj = h_meet_join(z, w);
    lo_ = mj.meet;
    hi_ = mj.join;
  }

  Hyperbolic lo() const { return lo_; }
  Hyperbolic hi() const { return hi_; }
  bool contains(Hyperbolic v) const { return h_leq(lo_, v) && h_leq(v, hi_); }

private:
  Hyperbolic lo_;
  Hyperbolic hi_;
};

inline bool h_interval_contains(Hyperbolic z, Hyperbolic w, Hyperbolic v) {
  return HInterval(z, w).contains(v);
}

}  // namespace fuzzbet
