#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "semitrace/value_ideal.hpp"

namespace semitrace {

/// A monomial birational extension R ⊆ T ⊆ R̄ = k[[t]]: a value set that
/// contains v(R), lies in ℕ and is additively closed.
class ExtensionRing {
 public:
  /// Validates the carrier; throws ClosureViolation otherwise.
  explicit ExtensionRing(ValueIdeal carrier);

  /// R̄ = k[[t]] over the given ring.
  static ExtensionRing normalization(SemigroupPtr ring);

  const ValueIdeal& carrier() const noexcept { return carrier_; }
  const NumericalSemigroup& base() const noexcept { return carrier_.semigroup(); }

 private:
  ValueIdeal carrier_;
};

/// tr(I) = (R : I) I.
ValueIdeal trace_ideal(const ValueIdeal& ideal);

/// I = R : (R : I).
bool is_reflexive(const ValueIdeal& ideal);

/// I = tr(I). Throws NotIntegral for I ⊄ R.
bool is_trace_ideal(const ValueIdeal& ideal);

/// xR :_R m = m with x = t^e, e the multiplicity. Cross-checked against
/// e(R) = μ(m). Throws RegularRing for ℕ.
bool is_minimal_multiplicity(const NumericalSemigroup& semigroup);
bool is_minimal_multiplicity(const SemigroupPtr& semigroup);

/// t^x R :_R I = (t^x R : I) ∩ R. Throws NotMember when x ∉ v(I).
ValueIdeal colon_in_ring(int x_exp, const ValueIdeal& ideal);
/// Same with x = t^(min v(I)).
ValueIdeal colon_in_ring(const ValueIdeal& ideal);

/// R : I ⊆ R̄, i.e. min v(I*) >= 0. When it holds, h(I) = ℓ(R/I).
/// Throws NotIntegral.
bool partial_trace_criterion(const ValueIdeal& ideal);

struct MonomialPartialTrace {
  int shift = 0;      // a ∈ v(I*) realizing the minimum, smallest on ties
  int colength = 0;   // ℓ(R / t^a I); an upper bound for h(I)
  bool exact = false; // the criterion holds for t^a I, so colength == h(I)
};

/// Minimum of ℓ(R / t^a I) over the monomial homomorphisms t^a : I -> R.
/// Throws NotIntegral.
MonomialPartialTrace monomial_partial_trace(const ValueIdeal& ideal);

/// End_R(I) = I : I. Throws ClosureViolation if the colon fails to be a ring,
/// which can only signal a defect in the arithmetic.
ExtensionRing endomorphism_ring(const ValueIdeal& ideal);

/// C_R(T) = R : T.
ValueIdeal conductor_of_extension(const ExtensionRing& extension);

/// One link of the containment chain checked by verify_chain.
struct ChainLink {
  std::string_view relation;
  bool holds = false;
};

inline constexpr std::size_t kChainLinks = 8;
using ChainReport = std::array<ChainLink, kChainLinks>;

/// With x = t^(min v(I)), L = tr(I):
///   C ⊆ xR:_R Ī = xR:_R cl(L) ⊆ xR:_R L ⊆ xR:_R I ⊆ L ⊆ cl(L) = Ī ⊆ m.
/// Requires I ⊆ R proper with R : I ⊆ R̄; throws NotIntegral or
/// PreconditionFailed otherwise.
ChainReport chain_links(const ValueIdeal& ideal);
bool verify_chain(const ValueIdeal& ideal);

/// I² = xI for x = t^(min v(I)).
bool is_stable(const ValueIdeal& ideal);

struct IdealProfile {
  ValueIdeal ideal;
  std::vector<int> generators;
  ValueIdeal dual;
  ValueIdeal double_dual;
  ValueIdeal trace;
  bool is_reflexive = false;
  bool is_stable = false;
  // Only defined for I ⊆ R.
  std::optional<ValueIdeal> closure;
  std::optional<bool> is_trace_ideal;
  std::optional<bool> is_integrally_closed;
  std::optional<int> colength_in_ring;
  std::optional<bool> partial_trace_criterion;
};

IdealProfile profile(const ValueIdeal& ideal);

}  // namespace semitrace
