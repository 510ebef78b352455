#pragma once

#include <span>
#include <string>
#include <vector>

#include "semitrace/semigroup.hpp"

namespace semitrace {

/// A monomial fractional ideal I of R = k[[S]], stored canonically through
/// its value set v(I) = { r ∈ ℤ : t^r ∈ I }.
///
/// v(I) is determined by its least element m0, its stabilization bound b
/// (every n >= b is a member and, unless b == m0, b - 1 is not) and a
/// membership window over [m0, b). Nonempty by construction; S + v(I) ⊆ v(I).
class ValueIdeal {
 public:
  /// v(I) = ∪_e (e + S). Throws EmptyGenerators.
  static ValueIdeal from_exponents(SemigroupPtr ring, std::span<const int> exponents);
  static ValueIdeal from_exponents(SemigroupPtr ring, std::initializer_list<int> exponents) {
    return from_exponents(std::move(ring),
                          std::span<const int>(exponents.begin(), exponents.size()));
  }

  /// Builds from an explicit value set: `members` are the elements below
  /// `stable`; everything >= stable is in. Rejects sets that are empty or not
  /// closed under the semigroup action (ClosureViolation).
  static ValueIdeal from_value_set(SemigroupPtr ring, std::vector<int> members, int stable);

  /// v(R) itself.
  static ValueIdeal unit(SemigroupPtr ring);
  /// t^a R.
  static ValueIdeal principal(SemigroupPtr ring, int a);
  /// The maximal ideal m, value set S \ {0}.
  static ValueIdeal maximal(SemigroupPtr ring);
  /// The conductor C = R : R̄, value set [c, ∞).
  static ValueIdeal conductor(SemigroupPtr ring);
  /// v(R̄) = ℕ as a fractional ideal of R.
  static ValueIdeal normalization(SemigroupPtr ring);

  const NumericalSemigroup& semigroup() const noexcept { return *ring_; }
  const SemigroupPtr& ring() const noexcept { return ring_; }

  int min_value() const noexcept { return min_; }
  int stable_bound() const noexcept { return stable_; }

  bool contains(int n) const noexcept {
    if (n < min_) return false;
    if (n >= stable_) return true;
    return window_[static_cast<std::size_t>(n - min_)];
  }

  /// Members in [m0, b).
  std::vector<int> window_members() const;
  /// The unique minimal monomial generating set; its size is μ(I).
  std::vector<int> minimal_generators() const;
  int num_generators() const { return static_cast<int>(minimal_generators().size()); }

  bool is_subset_of(const ValueIdeal& other) const;
  /// I ⊆ R.
  bool is_integral() const;
  bool is_principal() const { return num_generators() == 1; }

  /// "{8,9}∪[15,∞)" style rendering.
  std::string to_string() const;

  bool operator==(const ValueIdeal& other) const noexcept {
    return min_ == other.min_ && stable_ == other.stable_ && window_ == other.window_ &&
           *ring_ == *other.ring_;
  }

 private:
  ValueIdeal(SemigroupPtr ring, int min, int stable, std::vector<bool> window)
      : ring_(std::move(ring)), min_(min), stable_(stable), window_(std::move(window)) {}

  friend class IdealBuilder;

  SemigroupPtr ring_;
  int min_ = 0;
  int stable_ = 0;
  std::vector<bool> window_;
};

/// t^a I.
ValueIdeal shift(const ValueIdeal& ideal, int a);

/// v(I + J) = v(I) ∪ v(J). Throws RingMismatch.
ValueIdeal sum(const ValueIdeal& lhs, const ValueIdeal& rhs);
/// v(IJ) = v(I) + v(J). Throws RingMismatch.
ValueIdeal product(const ValueIdeal& lhs, const ValueIdeal& rhs);
/// v(I ∩ J) = v(I) ∩ v(J). Throws RingMismatch.
ValueIdeal intersect(const ValueIdeal& lhs, const ValueIdeal& rhs);

/// I : J = { α : αJ ⊆ I }, computed as the intersection of t^(-g) I over the
/// minimal generators g of J. Throws RingMismatch.
ValueIdeal colon(const ValueIdeal& numerator, const ValueIdeal& denominator);

/// R : I.
ValueIdeal dual(const ValueIdeal& ideal);
/// R : (R : I).
ValueIdeal double_dual(const ValueIdeal& ideal);

/// ℓ(I/J) = |v(I) \ v(J)|. Throws NotContained unless J ⊆ I.
int colength(const ValueIdeal& outer, const ValueIdeal& inner);

/// Ī = { n ∈ v(R) : n >= m0 } for I ⊆ R. Throws NotIntegral.
ValueIdeal integral_closure(const ValueIdeal& ideal);

/// True when J = t^a I for some a; returns that a through `offset`.
bool shift_equivalent(const ValueIdeal& lhs, const ValueIdeal& rhs, int* offset = nullptr);

}  // namespace semitrace
