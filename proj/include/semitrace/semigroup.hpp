#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace semitrace {

/// A numerical semigroup S = <a1,...,an> ⊆ ℕ, i.e. the value semigroup of
/// the ring k[[t^a1,...,t^an]].
///
/// Storage is a membership table over [0, c] where c is the conductor
/// exponent; every n > c is a member. Instances are immutable.
class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators, InvalidInput (non-positive entry) or GcdNotOne.
  explicit NumericalSemigroup(std::span<const int> generators);
  NumericalSemigroup(std::initializer_list<int> generators)
      : NumericalSemigroup(std::span<const int>(generators.begin(), generators.size())) {}

  /// The generators as given, sorted with duplicates removed.
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::vector<int>& minimal_generators() const noexcept { return minimal_generators_; }

  /// Largest gap, -1 for ℕ.
  int frobenius() const noexcept { return conductor_ - 1; }
  /// c = F + 1; t^(c+i) ∈ R for all i >= 0.
  int conductor() const noexcept { return conductor_; }
  int genus() const noexcept { return genus_; }
  /// e(R), the smallest positive element.
  int multiplicity() const noexcept { return minimal_generators_.front(); }
  /// μ(m), the number of minimal generators.
  int embedding_dimension() const noexcept {
    return static_cast<int>(minimal_generators_.size());
  }
  /// True for ℕ = <1>, the value semigroup of the regular ring k[[t]].
  bool is_regular() const noexcept { return conductor_ == 0; }

  bool contains(int n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return window_[static_cast<std::size_t>(n)];
  }

  std::vector<int> gaps() const;
  /// Members of S in [0, bound).
  std::vector<int> elements_below(int bound) const;
  /// ℓ(R/C): the number of members below the conductor.
  int colength_of_conductor() const noexcept { return conductor_ - genus_; }

  /// S \ {g}; requires g to be a minimal generator (otherwise the result is
  /// not closed). Throws InvalidInput.
  NumericalSemigroup without_generator(int g) const;

  std::string to_string() const;

  bool operator==(const NumericalSemigroup& other) const noexcept {
    return conductor_ == other.conductor_ && window_ == other.window_;
  }

 private:
  struct FromWindow {};
  NumericalSemigroup(FromWindow, std::vector<bool> window);
  void finish_from_window();

  std::vector<int> generators_;
  std::vector<int> minimal_generators_;
  int conductor_ = 0;
  int genus_ = 0;
  std::vector<bool> window_;  // membership over [0, conductor)
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::span<const int> generators);
SemigroupPtr make_semigroup(std::initializer_list<int> generators);

/// Parses "7,8,9,11" (whitespace tolerated). Throws InvalidInput.
std::vector<int> parse_exponent_list(const std::string& text);

/// Ordering used in reports: (genus, minimal generators lexicographic).
bool report_order_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// Upper bound accepted by enumerate_semigroups unless overridden.
inline constexpr int kDefaultMaxGenusCeiling = 20;

/// Every numerical semigroup of genus <= max_genus exactly once, obtained by
/// the tree walk rooted at ℕ whose children remove one minimal generator
/// larger than the Frobenius number. Produced genus by genus, each level in
/// lexicographic order of minimal generators. Throws ResourceLimit when
/// max_genus exceeds `ceiling`, InvalidInput when negative.
void enumerate_semigroups(int max_genus,
                          const std::function<void(const NumericalSemigroup&)>& visit,
                          int ceiling = kDefaultMaxGenusCeiling);

std::vector<NumericalSemigroup> semigroups_up_to_genus(
    int max_genus, int ceiling = kDefaultMaxGenusCeiling);

}  // namespace semitrace
