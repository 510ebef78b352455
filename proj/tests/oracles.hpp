#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// touches the library's window arithmetic: semigroups are built by closing a
// set under addition, ideals by unions of translates, and colons/products by
// exhaustive pair checks over explicit integer ranges.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semitrace/value_ideal.hpp"

namespace oracle {

/// Elements of <gens> up to `limit`, by worklist closure.
inline std::set<int> semigroup_members(const std::vector<int>& gens, int limit) {
  std::set<int> seen{0};
  std::vector<int> work{0};
  while (!work.empty()) {
    const int x = work.back();
    work.pop_back();
    for (int g : gens) {
      const int y = x + g;
      if (y <= limit && seen.insert(y).second) work.push_back(y);
    }
  }
  return seen;
}

/// Frobenius number from membership on [0, limit]; the caller picks a limit
/// well past the true value.
inline int frobenius(const std::vector<int>& gens, int limit) {
  const auto members = semigroup_members(gens, limit);
  int f = -1;
  for (int n = 0; n <= limit; ++n) {
    if (!members.count(n)) f = n;
  }
  return f;
}

/// A value set: explicit members below `stable`, everything from `stable` on.
struct ValueSet {
  std::set<int> below;
  int stable = 0;

  bool contains(int n) const { return n >= stable || below.count(n) > 0; }
  int min() const { return below.empty() ? stable : *below.begin(); }
};

/// Plain membership predicate for the semigroup, valid for every integer
/// given that `limit` exceeds its conductor.
struct Semigroup {
  std::set<int> members;
  int limit = 0;

  Semigroup(const std::vector<int>& gens, int lim)
      : members(semigroup_members(gens, lim)), limit(lim) {}
  bool contains(int n) const { return n >= 0 && (n > limit || members.count(n) > 0); }
};

/// ∪_e (e + S), with `horizon` past which everything is assumed present.
inline ValueSet ideal(const Semigroup& s, const std::vector<int>& exps, int horizon) {
  ValueSet out;
  out.stable = horizon;
  const int lo = *std::min_element(exps.begin(), exps.end());
  for (int n = lo; n < horizon; ++n) {
    for (int e : exps) {
      if (s.contains(n - e)) {
        out.below.insert(n);
        break;
      }
    }
  }
  return out;
}

/// { a : a + J ⊆ I } by checking every element of J up to a bound beyond
/// which a + n lies in I's cofinite tail.
inline ValueSet colon(const ValueSet& I, const ValueSet& J) {
  ValueSet out;
  const int lo = I.min() - J.stable - 2;
  const int hi = I.stable - J.min() + 2;
  out.stable = hi;
  for (int a = lo; a < hi; ++a) {
    bool ok = true;
    for (int n = J.min(); n <= std::max(J.stable, I.stable - a) + 1 && ok; ++n) {
      if (J.contains(n) && !I.contains(a + n)) ok = false;
    }
    if (ok) out.below.insert(a);
  }
  return out;
}

/// { x + y : x ∈ I, y ∈ J } by exhaustive pairs.
inline ValueSet product(const ValueSet& I, const ValueSet& J) {
  ValueSet out;
  const int lo = I.min() + J.min();
  out.stable = I.stable + J.stable + 2;
  for (int n = lo; n < out.stable; ++n) {
    for (int x = I.min(); x <= n - J.min(); ++x) {
      if (I.contains(x) && J.contains(n - x)) {
        out.below.insert(n);
        break;
      }
    }
  }
  return out;
}

inline ValueSet intersect(const ValueSet& I, const ValueSet& J) {
  ValueSet out;
  out.stable = std::max(I.stable, J.stable);
  for (int n = std::min(I.min(), J.min()); n < out.stable; ++n) {
    if (I.contains(n) && J.contains(n)) out.below.insert(n);
  }
  return out;
}

inline ValueSet unit(const Semigroup& s, int horizon) { return ideal(s, {0}, horizon); }

/// Exact agreement of a library value set with an oracle set over [lo, hi).
inline bool same(const semitrace::ValueIdeal& lib, const ValueSet& ref, int lo, int hi) {
  for (int n = lo; n < hi; ++n) {
    if (lib.contains(n) != ref.contains(n)) return false;
  }
  return true;
}

/// Number of numerical semigroups of genus g: gap sets G ⊆ [1, 2g-1] with
/// |G| = g whose complement in ℕ is additively closed.
inline std::vector<std::uint64_t> semigroup_counts_by_genus(int max_genus) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_genus + 1), 0);
  counts[0] = 1;
  for (int g = 1; g <= max_genus; ++g) {
    const int width = 2 * g - 1;
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
      if (std::popcount(mask) != g) continue;
      auto gap = [&](int n) { return n >= 1 && n <= width && ((mask >> (n - 1)) & 1u); };
      bool closed = true;
      for (int x = 1; x <= width && closed; ++x) {
        if (gap(x)) continue;
        for (int y = x; x + y <= width; ++y) {
          if (!gap(y) && gap(x + y)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) ++counts[static_cast<std::size_t>(g)];
    }
  }
  return counts;
}

/// Random generator sets with gcd 1 and conductor at most `max_conductor`.
class SemigroupSampler {
 public:
  explicit SemigroupSampler(std::uint64_t seed, int max_conductor = 30)
      : rng_(seed), max_conductor_(max_conductor) {}

  std::vector<int> next() {
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_int_distribution<int> value(2, 24);
    for (;;) {
      std::vector<int> gens(static_cast<std::size_t>(count(rng_)));
      for (int& g : gens) g = value(rng_);
      int d = 0;
      for (int g : gens) d = std::gcd(d, g);
      if (d != 1) continue;
      if (frobenius(gens, 4 * max_conductor_ + 50) + 1 > max_conductor_) continue;
      return gens;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_conductor_;
};

/// 1 to `max_count` exponents drawn uniformly from [lo, hi].
inline std::vector<int> random_exponents(std::mt19937_64& rng, int lo, int hi, int max_count = 4) {
  std::uniform_int_distribution<int> count(1, max_count);
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<int> out(static_cast<std::size_t>(count(rng)));
  for (int& e : out) e = value(rng);
  return out;
}

/// 1 to `max_count` exponents drawn from the positive members of S below `hi`.
inline std::vector<int> random_members(std::mt19937_64& rng, const semitrace::NumericalSemigroup& s,
                                       int hi, int max_count = 4) {
  const auto members = s.elements_below(hi);
  std::uniform_int_distribution<std::size_t> pick(1, members.size() - 1);
  std::uniform_int_distribution<int> count(1, max_count);
  std::vector<int> out(static_cast<std::size_t>(count(rng)));
  for (int& e : out) e = members[pick(rng)];
  return out;
}

}  // namespace oracle
