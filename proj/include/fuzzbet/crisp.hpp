#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fuzzbet/universe.hpp"

namespace fuzzbet {

// Subset of a finite universe, stored as an indicator vector in element order.
class CrispSet {
public:
  CrispSet(UniversePtr universe, std::vector<std::uint8_t> indicator);

  static CrispSet empty(UniversePtr universe);
  static CrispSet full(UniversePtr universe);
  static CrispSet of(UniversePtr universe, std::span<const std::string> members);
  static CrispSet of(UniversePtr universe, std::initializer_list<const char*> members);
  // Bit i of mask selects element i; universe size must be <= 64.
  static CrispSet from_mask(UniversePtr universe, std::uint64_t mask);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<std::uint8_t>& indicator() const noexcept { return bits_; }
  bool contains(std::size_t i) const { return bits_.at(i) != 0; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t cardinality() const noexcept;
  std::vector<std::string> members() const;

  friend bool operator==(const CrispSet& a, const CrispSet& b);

private:
  UniversePtr universe_;
  std::vector<std::uint8_t> bits_;
};

struct SetAlgebra {
  CrispSet set_union;
  CrispSet set_intersection;
  CrispSet sym_diff;
  CrispSet complement_of_a;
};

SetAlgebra set_algebra(const CrispSet& a, const CrispSet& b);

struct JaccardResult {
  double index;     // |A∩B| / |A∪B|, 0 when both sets are empty
  double distance;  // 1 - index (so distance(∅,∅) = 1; see README)
};

JaccardResult jaccard(const CrispSet& a, const CrispSet& b);

// Weighted symmetric-difference distance: measure of A Δ B.
double d_sigma(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b);

// d(A,C) + d(C,B) - d(A,B); zero exactly when C is between A and B.
double triangle_gap(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b,
                    const CrispSet& c);

// A∩B ⊆ C ⊆ A∪B.
bool is_between(const CrispSet& a, const CrispSet& b, const CrispSet& c);

// For C between A and B, the unique Z ⊆ AΔB with C = (A∩B) ∪ Z; empty otherwise.
std::optional<CrispSet> between_decomposition(const CrispSet& a, const CrispSet& b,
                                              const CrispSet& c);

// All sets between A and B, i.e. {(A∩B) ∪ Z : Z ⊆ AΔB}, in mask order over AΔB.
// Guard: |AΔB| <= 24.
std::vector<CrispSet> enumerate_between(const CrispSet& a, const CrispSet& b);
void enumerate_between(const CrispSet& a, const CrispSet& b,
                       const std::function<void(const CrispSet&)>& yield);

// sqrt(d(A,C)) + sqrt(d(C,B)) - sqrt(d(A,B)); zero only at C == A or C == B.
double sqrt_triangle_gap(const WeightedMeasure& m, const CrispSet& a, const CrispSet& b,
                         const CrispSet& c);

}  // namespace fuzzbet
