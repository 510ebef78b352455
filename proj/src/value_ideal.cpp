#include "semitrace/value_ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semitrace/error.hpp"

namespace semitrace {

/// Canonicalizes a value set given as a predicate over [lo, hi), with every
/// integer >= hi taken to be a member.
class IdealBuilder {
 public:
  template <typename Pred>
  static ValueIdeal build(SemigroupPtr ring, int lo, int hi, Pred&& pred) {
    int m0 = hi;
    for (int n = lo; n < hi; ++n) {
      if (pred(n)) {
        m0 = n;
        break;
      }
    }
    int b = m0;
    for (int n = hi - 1; n >= m0; --n) {
      if (!pred(n)) {
        b = n + 1;
        break;
      }
    }
    std::vector<bool> window(static_cast<std::size_t>(b - m0));
    for (int n = m0; n < b; ++n) window[static_cast<std::size_t>(n - m0)] = pred(n);
    return ValueIdeal(std::move(ring), m0, b, std::move(window));
  }
};

namespace {

void require_same_ring(const ValueIdeal& a, const ValueIdeal& b) {
  if (a.ring() != b.ring() && !(a.semigroup() == b.semigroup())) {
    throw Error(ErrorKind::RingMismatch, "ideals over " + a.semigroup().to_string() + " and " +
                                             b.semigroup().to_string());
  }
}

}  // namespace

ValueIdeal ValueIdeal::from_exponents(SemigroupPtr ring, std::span<const int> exponents) {
  if (exponents.empty()) {
    throw Error(ErrorKind::EmptyGenerators, "an ideal needs at least one generator");
  }
  const auto [lo_it, hi_it] = std::minmax_element(exponents.begin(), exponents.end());
  const int lo = *lo_it;
  const int hi = *hi_it + ring->conductor();
  const NumericalSemigroup& s = *ring;
  return IdealBuilder::build(std::move(ring), lo, hi, [&](int n) {
    return std::any_of(exponents.begin(), exponents.end(),
                       [&](int e) { return s.contains(n - e); });
  });
}

ValueIdeal ValueIdeal::from_value_set(SemigroupPtr ring, std::vector<int> members, int stable) {
  std::set<int> below;
  for (int m : members) {
    if (m < stable) below.insert(m);
  }
  const int lo = below.empty() ? stable : *below.begin();
  auto pred = [&](int n) { return n >= stable || below.count(n) > 0; };
  for (int e : below) {
    for (int a : ring->minimal_generators()) {
      if (!pred(e + a)) {
        throw Error(ErrorKind::ClosureViolation,
                    std::to_string(e) + " + " + std::to_string(a) +
                        " is missing; value set is not closed under " + ring->to_string());
      }
    }
  }
  return IdealBuilder::build(std::move(ring), lo, stable, pred);
}

ValueIdeal ValueIdeal::unit(SemigroupPtr ring) { return principal(std::move(ring), 0); }

ValueIdeal ValueIdeal::principal(SemigroupPtr ring, int a) {
  return from_exponents(std::move(ring), {a});
}

ValueIdeal ValueIdeal::maximal(SemigroupPtr ring) {
  const NumericalSemigroup& s = *ring;
  const int hi = std::max(1, s.conductor());
  return IdealBuilder::build(std::move(ring), 1, hi, [&](int n) { return s.contains(n); });
}

ValueIdeal ValueIdeal::conductor(SemigroupPtr ring) {
  const int c = ring->conductor();
  return from_value_set(std::move(ring), {}, c);
}

ValueIdeal ValueIdeal::normalization(SemigroupPtr ring) {
  return from_value_set(std::move(ring), {}, 0);
}

std::vector<int> ValueIdeal::window_members() const {
  std::vector<int> out;
  for (int n = min_; n < stable_; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<int> ValueIdeal::minimal_generators() const {
  const NumericalSemigroup& s = *ring_;
  const int e = s.is_regular() ? 1 : s.multiplicity();
  std::vector<int> out;
  for (int n = min_; n < stable_ + e; ++n) {
    if (!contains(n)) continue;
    bool generated = false;
    for (int step = e; step <= n - min_; ++step) {
      if (s.contains(step) && contains(n - step)) {
        generated = true;
        break;
      }
    }
    if (!generated) out.push_back(n);
  }
  return out;
}

bool ValueIdeal::is_subset_of(const ValueIdeal& other) const {
  require_same_ring(*this, other);
  const int lo = std::min(min_, other.min_);
  const int hi = std::max(stable_, other.stable_);
  for (int n = lo; n < hi; ++n) {
    if (contains(n) && !other.contains(n)) return false;
  }
  return true;
}

bool ValueIdeal::is_integral() const {
  if (min_ < 0) return false;
  const int hi = std::max(stable_, ring_->conductor());
  for (int n = min_; n < hi; ++n) {
    if (contains(n) && !ring_->contains(n)) return false;
  }
  return true;
}

std::string ValueIdeal::to_string() const {
  std::ostringstream os;
  const auto members = window_members();
  if (!members.empty()) {
    os << '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) os << ',';
      os << members[i];
    }
    os << "}∪";
  }
  os << '[' << stable_ << ",∞)";
  return os.str();
}

ValueIdeal shift(const ValueIdeal& ideal, int a) {
  const int lo = ideal.min_value() + a;
  const int hi = ideal.stable_bound() + a;
  return IdealBuilder::build(ideal.ring(), lo, hi,
                             [&](int n) { return ideal.contains(n - a); });
}

ValueIdeal sum(const ValueIdeal& lhs, const ValueIdeal& rhs) {
  require_same_ring(lhs, rhs);
  const int lo = std::min(lhs.min_value(), rhs.min_value());
  const int hi = std::max(lhs.stable_bound(), rhs.stable_bound());
  return IdealBuilder::build(lhs.ring(), lo, hi,
                             [&](int n) { return lhs.contains(n) || rhs.contains(n); });
}

ValueIdeal product(const ValueIdeal& lhs, const ValueIdeal& rhs) {
  require_same_ring(lhs, rhs);
  const auto gens = lhs.minimal_generators();
  const int lo = lhs.min_value() + rhs.min_value();
  const int hi = lhs.min_value() + rhs.stable_bound();
  return IdealBuilder::build(lhs.ring(), lo, hi, [&](int n) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return rhs.contains(n - g); });
  });
}

ValueIdeal intersect(const ValueIdeal& lhs, const ValueIdeal& rhs) {
  require_same_ring(lhs, rhs);
  const int lo = std::max(lhs.min_value(), rhs.min_value());
  const int hi = std::max(lo, std::max(lhs.stable_bound(), rhs.stable_bound()));
  return IdealBuilder::build(lhs.ring(), lo, hi,
                             [&](int n) { return lhs.contains(n) && rhs.contains(n); });
}

ValueIdeal colon(const ValueIdeal& numerator, const ValueIdeal& denominator) {
  require_same_ring(numerator, denominator);
  // t^a J ⊆ I iff a + g ∈ v(I) for every generator g of J, since I absorbs S.
  const auto gens = denominator.minimal_generators();
  const int lo = numerator.min_value() - denominator.min_value();
  const int hi = std::max(lo, numerator.stable_bound() - denominator.min_value());
  return IdealBuilder::build(numerator.ring(), lo, hi, [&](int n) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](int g) { return numerator.contains(n + g); });
  });
}

ValueIdeal dual(const ValueIdeal& ideal) {
  return colon(ValueIdeal::unit(ideal.ring()), ideal);
}

ValueIdeal double_dual(const ValueIdeal& ideal) { return dual(dual(ideal)); }

int colength(const ValueIdeal& outer, const ValueIdeal& inner) {
  if (!inner.is_subset_of(outer)) {
    throw Error(ErrorKind::NotContained,
                inner.to_string() + " is not contained in " + outer.to_string());
  }
  const int lo = std::min(outer.min_value(), inner.min_value());
  const int hi = std::max(outer.stable_bound(), inner.stable_bound());
  int count = 0;
  for (int n = lo; n < hi; ++n) {
    if (outer.contains(n) && !inner.contains(n)) ++count;
  }
  return count;
}

ValueIdeal integral_closure(const ValueIdeal& ideal) {
  if (!ideal.is_integral()) {
    throw Error(ErrorKind::NotIntegral, ideal.to_string() + " is not contained in R");
  }
  const NumericalSemigroup& s = ideal.semigroup();
  const int m0 = ideal.min_value();
  return IdealBuilder::build(ideal.ring(), m0, std::max(m0, s.conductor()),
                             [&](int n) { return s.contains(n); });
}

bool shift_equivalent(const ValueIdeal& lhs, const ValueIdeal& rhs, int* offset) {
  const int a = rhs.min_value() - lhs.min_value();
  if (!(shift(lhs, a) == rhs)) return false;
  if (offset) *offset = a;
  return true;
}

}  // namespace semitrace
