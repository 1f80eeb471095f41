#include "fuzzbet/crisp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fuzzbet {

CrispSet::CrispSet(UniversePtr universe, std::vector<std::uint8_t> indicator)
    : universe_(std::move(universe)), bits_(std::move(indicator)) {
  if (!universe_) throw Error(errc::input, "set: null universe");
  if (bits_.size() != universe_->size()) {
    throw Error(errc::input, "set: indicator length " + std::to_string(bits_.size()) +
                                 " does not match universe size " +
                                 std::to_string(universe_->size()));
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

CrispSet CrispSet::empty(UniversePtr universe) {
  if (!universe) throw Error(errc::input, "set: null universe");
  auto n = universe->size();
  return CrispSet(std::move(universe), std::vector<std::uint8_t>(n, 0));
}

CrispSet CrispSet::full(UniversePtr universe) {
  if (!universe) throw Error(errc::input, "set: null universe");
  auto n = universe->size();
  return CrispSet(std::move(universe), std::vector<std::uint8_t>(n, 1));
}

CrispSet CrispSet::of(UniversePtr universe, std::span<const std::string> members) {
  if (!universe) throw Error(errc::input, "set: null universe");
  std::vector<std::uint8_t> bits(universe->size(), 0);
  for (const auto& id : members) bits[universe->index_of(id)] = 1;
  return CrispSet(std::move(universe), std::move(bits));
}

CrispSet CrispSet::of(UniversePtr universe, std::initializer_list<const char*> members) {
  std::vector<std::string> ids(members.begin(), members.end());
  return of(std::move(universe), std::span<const std::string>(ids));
}

CrispSet CrispSet::from_mask(UniversePtr universe, std::uint64_t mask) {
  if (!universe) throw Error(errc::input, "set: null universe");
  if (universe->size() > 64) {
    throw Error(errc::guard, "set: mask constructor limited to universes of size <= 64");
  }
  std::vector<std::uint8_t> bits(universe->size(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (mask >> i) & 1u;
  return CrispSet(std::move(universe), std::move(bits));
}

std::size_t CrispSet::cardinality() const noexcept {
  return static_cast<std::size_t>(std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

std::vector<std::string> CrispSet::members() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(universe_->element(i));
  }
  return out;
}

bool operator==(const CrispSet& a, const CrispSet& b) {
  return same_universe(a.universe_, b.universe_) && a.bits_ == b.bits_;
}

namespace {

void require_same(const CrispSet& a, const CrispSet& b, const char* op) {
  if (!same_universe(a.universe(), b.universe())) throw_mismatch(op);
}

}  // namespace

SetAlgebra set_algebra(const CrispSet& a, const CrispSet& b) {
  require_same(a, b, "set_algebra");
  const auto n = a.size();
  std::vector<std::uint8_t> uni(n), inter(n), sym(n), comp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t x = a.indicator()[i];
    const std::uint8_t y = b.indicator()[i];
    uni[i] = x | y;
    inter[i] = x & y;
    sym[i] = x ^ y;
    comp[i] = 1 - x;
  }
  return {CrispSet(a.universe(), std::move(uni)), CrispSet(a.universe(), std::move(inter)),
          CrispSet(a.universe(), std::move(sym)), CrispSet(a.universe(), std::move(comp))};
}

JaccardResult jaccard(const CrispSet& a, const CrispSet& b) {
  require_same(a, b, "jaccard");
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint8_t x = a.indicator()[i];
    const std::uint8_t y = b.indicator()[i];
    inter += x & y;
    uni += x | y;
  }
  const double index = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  return {index, 1.0 - index};
}

double d_sigma(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b) {
  require_same(a, b, "d_sigma");
  if (!same_universe(m.universe(), a.universe())) throw_mismatch("d_sigma");
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.indicator()[i] != b.indicator()[i]) total += m.weight(i);
  }
  return total;
}

double triangle_gap(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b,
                    const CrispSet& c) {
  return d_sigma(m, a, c) + d_sigma(m, c, b) - d_sigma(m, a, b);
}

bool is_between(const CrispSet& a, const CrispSet& b, const CrispSet& c) {
  require_same(a, b, "is_between");
  require_same(a, c, "is_between");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint8_t lo = a.indicator()[i] & b.indicator()[i];
    const std::uint8_t hi = a.indicator()[i] | b.indicator()[i];
    const std::uint8_t x = c.indicator()[i];
    if (x < lo || x > hi) return false;
  }
  return true;
}

std::optional<CrispSet> between_decomposition(const CrispSet& a, const CrispSet& b,
                                              const CrispSet& c) {
  if (!is_between(a, b, c)) return std::nullopt;
  std::vector<std::uint8_t> z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    z[i] = c.indicator()[i] & ~(a.indicator()[i] & b.indicator()[i]) & 1;
  }
  return CrispSet(a.universe(), std::move(z));
}

void enumerate_between(const CrispSet& a, const CrispSet& b,
                       const std::function<void(const CrispSet&)>& yield) {
  require_same(a, b, "enumerate_between");
  std::vector<std::size_t> diff;
  std::vector<std::uint8_t> base(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    base[i] = a.indicator()[i] & b.indicator()[i];
    if (a.indicator()[i] != b.indicator()[i]) diff.push_back(i);
  }
  if (diff.size() > 24) {
    throw Error(errc::guard, "enumerate_between: |A \xce\x94 B| = " +
                                 std::to_string(diff.size()) + " exceeds the guard of 24");
  }
  const std::uint64_t count = std::uint64_t{1} << diff.size();
  std::vector<std::uint8_t> bits = base;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < diff.size(); ++k) {
      bits[diff[k]] = base[diff[k]] | static_cast<std::uint8_t>((mask >> k) & 1u);
    }
    yield(CrispSet(a.universe(), bits));
  }
}

std::vector<CrispSet> enumerate_between(const CrispSet& a, const CrispSet& b) {
  std::vector<CrispSet> out;
  enumerate_between(a, b, [&](const CrispSet& s) { out.push_back(s); });
  return out;
}

double sqrt_triangle_gap(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b,
                         const CrispSet& c) {
  return std::sqrt(d_sigma(m, a, c)) + std::sqrt(d_sigma(m, c, b)) - std::sqrt(d_sigma(m, a, b));
}

}  // namespace fuzzbet
