#include "semitrace/trace.hpp"

#include <limits>

#include "semitrace/error.hpp"

namespace semitrace {

namespace {

void require_integral(const ValueIdeal& ideal, std::string_view op) {
  if (!ideal.is_integral()) {
    throw Error(ErrorKind::NotIntegral,
                std::string(op) + " needs an ideal of R, got " + ideal.to_string());
  }
}

bool additively_closed(const ValueIdeal& set) {
  // Members below the stable bound suffice: larger sums land in [b, ∞).
  const auto members = set.window_members();
  for (int x : members) {
    for (int y : members) {
      if (!set.contains(x + y)) return false;
    }
  }
  return true;
}

}  // namespace

ExtensionRing::ExtensionRing(ValueIdeal carrier) : carrier_(std::move(carrier)) {
  if (!carrier_.contains(0)) {
    throw Error(ErrorKind::ClosureViolation, carrier_.to_string() + " does not contain 0");
  }
  if (carrier_.min_value() < 0) {
    throw Error(ErrorKind::ClosureViolation, carrier_.to_string() + " is not inside ℕ");
  }
  if (!additively_closed(carrier_)) {
    throw Error(ErrorKind::ClosureViolation,
                carrier_.to_string() + " is not closed under addition");
  }
}

ExtensionRing ExtensionRing::normalization(SemigroupPtr ring) {
  return ExtensionRing(ValueIdeal::normalization(std::move(ring)));
}

ValueIdeal trace_ideal(const ValueIdeal& ideal) { return product(dual(ideal), ideal); }

bool is_reflexive(const ValueIdeal& ideal) { return ideal == double_dual(ideal); }

bool is_trace_ideal(const ValueIdeal& ideal) {
  require_integral(ideal, "is_trace_ideal");
  return ideal == trace_ideal(ideal);
}

bool is_minimal_multiplicity(const SemigroupPtr& semigroup) {
  if (semigroup->is_regular()) {
    throw Error(ErrorKind::RegularRing, "minimal multiplicity is defined for non-regular rings");
  }
  const ValueIdeal m = ValueIdeal::maximal(semigroup);
  const bool by_colon = colon_in_ring(semigroup->multiplicity(), m) == m;
  const bool by_counts = semigroup->multiplicity() == semigroup->embedding_dimension();
  if (by_colon != by_counts) {
    throw Error(ErrorKind::AssertionFailure,
                "colon test and e(R) = μ(m) disagree for " + semigroup->to_string());
  }
  return by_colon;
}

bool is_minimal_multiplicity(const NumericalSemigroup& semigroup) {
  return is_minimal_multiplicity(std::make_shared<const NumericalSemigroup>(semigroup));
}

ValueIdeal colon_in_ring(int x_exp, const ValueIdeal& ideal) {
  if (!ideal.contains(x_exp)) {
    throw Error(ErrorKind::NotMember,
                std::to_string(x_exp) + " is not in " + ideal.to_string());
  }
  const ValueIdeal unit = ValueIdeal::unit(ideal.ring());
  return intersect(colon(shift(unit, x_exp), ideal), unit);
}

ValueIdeal colon_in_ring(const ValueIdeal& ideal) {
  return colon_in_ring(ideal.min_value(), ideal);
}

bool partial_trace_criterion(const ValueIdeal& ideal) {
  require_integral(ideal, "partial_trace_criterion");
  return dual(ideal).min_value() >= 0;
}

MonomialPartialTrace monomial_partial_trace(const ValueIdeal& ideal) {
  require_integral(ideal, "monomial_partial_trace");
  const NumericalSemigroup& s = ideal.semigroup();
  const ValueIdeal unit = ValueIdeal::unit(ideal.ring());
  const ValueIdeal homs = dual(ideal);

  MonomialPartialTrace best;
  best.colength = std::numeric_limits<int>::max();
  // ℓ(R / t^a I) >= |v(R) ∩ [0, a + m0)|, which grows with a; stop once that
  // floor exceeds the best value found.
  int floor_count = 0;
  int counted_to = 0;
  for (int a = homs.min_value();; ++a) {
    const int top = a + ideal.min_value();
    while (counted_to < top) {
      if (s.contains(counted_to)) ++floor_count;
      ++counted_to;
    }
    if (floor_count > best.colength) break;
    if (!homs.contains(a)) continue;
    const ValueIdeal image = shift(ideal, a);
    const int len = colength(unit, image);
    if (len < best.colength) {
      best.shift = a;
      best.colength = len;
    }
  }
  best.exact = partial_trace_criterion(shift(ideal, best.shift));
  return best;
}

ExtensionRing endomorphism_ring(const ValueIdeal& ideal) {
  return ExtensionRing(colon(ideal, ideal));
}

ValueIdeal conductor_of_extension(const ExtensionRing& extension) {
  return dual(extension.carrier());
}

ChainReport chain_links(const ValueIdeal& ideal) {
  require_integral(ideal, "verify_chain");
  const ValueIdeal unit = ValueIdeal::unit(ideal.ring());
  if (ideal == unit) {
    throw Error(ErrorKind::PreconditionFailed, "the chain needs a proper ideal");
  }
  if (!partial_trace_criterion(ideal)) {
    throw Error(ErrorKind::PreconditionFailed,
                "R : I ⊄ R̄ for I = " + ideal.to_string());
  }
  const int x = ideal.min_value();
  const ValueIdeal cond = ValueIdeal::conductor(ideal.ring());
  const ValueIdeal maximal = ValueIdeal::maximal(ideal.ring());
  const ValueIdeal tr = trace_ideal(ideal);
  const ValueIdeal closure = integral_closure(ideal);
  const ValueIdeal tr_closure = integral_closure(tr);
  const ValueIdeal colon_closure = colon_in_ring(x, closure);
  const ValueIdeal colon_tr_closure = colon_in_ring(x, tr_closure);
  const ValueIdeal colon_tr = colon_in_ring(x, tr);
  const ValueIdeal colon_i = colon_in_ring(x, ideal);

  return {{
      {"C ⊆ xR:_R Ī", cond.is_subset_of(colon_closure)},
      {"xR:_R Ī = xR:_R cl(tr I)", colon_closure == colon_tr_closure},
      {"xR:_R cl(tr I) ⊆ xR:_R tr I", colon_tr_closure.is_subset_of(colon_tr)},
      {"xR:_R tr I ⊆ xR:_R I", colon_tr.is_subset_of(colon_i)},
      {"xR:_R I ⊆ tr I", colon_i.is_subset_of(tr)},
      {"tr I ⊆ cl(tr I)", tr.is_subset_of(tr_closure)},
      {"cl(tr I) = Ī", tr_closure == closure},
      {"Ī ⊆ m", closure.is_subset_of(maximal)},
  }};
}

bool verify_chain(const ValueIdeal& ideal) {
  for (const auto& link : chain_links(ideal)) {
    if (!link.holds) return false;
  }
  return true;
}

bool is_stable(const ValueIdeal& ideal) {
  return product(ideal, ideal) == shift(ideal, ideal.min_value());
}

IdealProfile profile(const ValueIdeal& ideal) {
  ValueIdeal d = dual(ideal);
  ValueIdeal dd = dual(d);
  IdealProfile p{
      .ideal = ideal,
      .generators = ideal.minimal_generators(),
      .dual = d,
      .double_dual = dd,
      .trace = product(d, ideal),
      .is_reflexive = ideal == dd,
      .is_stable = is_stable(ideal),
      .closure = std::nullopt,
      .is_trace_ideal = std::nullopt,
      .is_integrally_closed = std::nullopt,
      .colength_in_ring = std::nullopt,
      .partial_trace_criterion = std::nullopt,
  };
  if (ideal.is_integral()) {
    p.closure = integral_closure(ideal);
    p.is_trace_ideal = ideal == p.trace;
    p.is_integrally_closed = ideal == *p.closure;
    p.colength_in_ring = colength(ValueIdeal::unit(ideal.ring()), ideal);
    p.partial_trace_criterion = d.min_value() >= 0;
  }
  return p;
}

}  // namespace semitrace
