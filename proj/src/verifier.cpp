#include "semitrace/verifier.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "semitrace/error.hpp"

namespace semitrace {

namespace {

/// Every subset U of `candidates` (ascending) containing `forced` and closed
/// under x -> x + a for the steps a, where sums that are not candidates count
/// as members. Candidates are decided from the top down, so a choice is only
/// ever constrained by decisions already made.
class UpsetEnumerator {
 public:
  UpsetEnumerator(std::vector<int> candidates, const std::vector<int>& steps,
                  std::optional<int> forced, std::size_t limit)
      : candidates_(std::move(candidates)), steps_(steps), forced_(forced), limit_(limit) {
    if (!candidates_.empty()) {
      offset_ = candidates_.front();
      index_.assign(static_cast<std::size_t>(candidates_.back() - offset_ + 1), -1);
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        index_[static_cast<std::size_t>(candidates_[i] - offset_)] = static_cast<int>(i);
      }
    }
    chosen_.assign(candidates_.size(), false);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    descend(static_cast<int>(candidates_.size()) - 1, visit);
  }

 private:
  int index_of(int value) const {
    const int k = value - offset_;
    if (k < 0 || k >= static_cast<int>(index_.size())) return -1;
    return index_[static_cast<std::size_t>(k)];
  }

  bool may_include(int i) const {
    const int x = candidates_[static_cast<std::size_t>(i)];
    for (int a : steps_) {
      const int j = index_of(x + a);
      if (j >= 0 && !chosen_[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  }

  template <typename Visit>
  void descend(int i, Visit& visit) {
    if (i < 0) {
      if (++emitted_ > limit_) {
        throw Error(ErrorKind::ResourceLimit,
                    "more than " + std::to_string(limit_) + " candidate ideals");
      }
      std::vector<int> members;
      for (std::size_t k = 0; k < candidates_.size(); ++k) {
        if (chosen_[k]) members.push_back(candidates_[k]);
      }
      visit(std::move(members));
      return;
    }
    const bool forced = forced_ && candidates_[static_cast<std::size_t>(i)] == *forced_;
    if (!forced) descend(i - 1, visit);
    if (may_include(i)) {
      chosen_[static_cast<std::size_t>(i)] = true;
      descend(i - 1, visit);
      chosen_[static_cast<std::size_t>(i)] = false;
    }
  }

  std::vector<int> candidates_;
  const std::vector<int>& steps_;
  std::optional<int> forced_;
  std::size_t limit_;
  std::size_t emitted_ = 0;
  int offset_ = 0;
  std::vector<int> index_;
  std::vector<bool> chosen_;
};

std::vector<int> members_in(const NumericalSemigroup& s, int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n < hi; ++n) {
    if (s.contains(n)) out.push_back(n);
  }
  return out;
}

bool generator_order_less(const ValueIdeal& a, const ValueIdeal& b) {
  return a.minimal_generators() < b.minimal_generators();
}

SearchRecord make_record(const ValueIdeal& ideal, bool minimal_multiplicity) {
  const NumericalSemigroup& s = ideal.semigroup();
  const ValueIdeal tr = trace_ideal(ideal);
  SearchRecord r;
  r.semigroup = s.minimal_generators();
  r.ideal = ideal.minimal_generators();
  r.colength_R_mod_C = s.colength_of_conductor();
  r.minimal_multiplicity = minimal_multiplicity;
  r.genus = s.genus();
  for (Verdict v : kAllVerdicts) {
    bool value = false;
    switch (v) {
      case Verdict::Reflexive: value = is_reflexive(ideal); break;
      case Verdict::TraceIdeal: value = ideal == tr; break;
      case Verdict::TraceReflexive: value = is_reflexive(tr); break;
      case Verdict::IntegrallyClosed: value = ideal == integral_closure(ideal); break;
      case Verdict::ContainsConductor:
        value = ValueIdeal::conductor(ideal.ring()).is_subset_of(ideal);
        break;
      case Verdict::EqualsMaximal: value = ideal == ValueIdeal::maximal(ideal.ring()); break;
    }
    r.verdicts.emplace(std::string(verdict_name(v)), value);
  }
  return r;
}

bool ring_minimal_multiplicity(const SemigroupPtr& ring) {
  return !ring->is_regular() && is_minimal_multiplicity(ring);
}

}  // namespace

ValueIdeal canonical_shift(const ValueIdeal& ideal) {
  const NumericalSemigroup& s = ideal.semigroup();
  const ValueIdeal unit = ValueIdeal::unit(ideal.ring());
  const ValueIdeal homs = dual(ideal);
  const int m0 = ideal.min_value();

  int best_shift = 0;
  int best = std::numeric_limits<int>::max();
  int floor_count = 0;
  int counted_to = 0;
  for (int a = std::max(homs.min_value(), 1 - m0);; ++a) {
    while (counted_to < a + m0) {
      if (s.contains(counted_to)) ++floor_count;
      ++counted_to;
    }
    if (floor_count > best) break;
    if (!homs.contains(a)) continue;
    const int len = colength(unit, shift(ideal, a));
    if (len < best) {
      best = len;
      best_shift = a;
    }
  }
  return shift(ideal, best_shift);
}

std::vector<ValueIdeal> enumerate_monomial_ideals(const SemigroupPtr& ring,
                                                  const IdealEnumerationOptions& options) {
  if (ring->is_regular()) {
    throw Error(ErrorKind::RegularRing, "ideal enumeration needs a non-regular ring");
  }
  const NumericalSemigroup& s = *ring;
  const int c = s.conductor();
  std::vector<ValueIdeal> out;

  auto keep = [&](ValueIdeal ideal) {
    if (options.reflexive_only && !is_reflexive(ideal)) return;
    if (options.trace_only && !(ideal == trace_ideal(ideal))) return;
    out.push_back(std::move(ideal));
  };

  switch (options.scope) {
    case IdealScope::ProperRegular:
      if (options.shift_normalized) {
        // Classes correspond to sets T with S ⊆ T ⊆ ℕ and S + T ⊆ T.
        const auto below = members_in(s, 0, c);
        UpsetEnumerator walk(s.gaps(), s.minimal_generators(), std::nullopt,
                             options.max_candidates);
        walk.run([&](std::vector<int> extra) {
          extra.insert(extra.end(), below.begin(), below.end());
          keep(canonical_shift(ValueIdeal::from_value_set(ring, std::move(extra), c)));
        });
      } else {
        std::size_t budget = options.max_candidates;
        for (int m0 : members_in(s, 1, c + 1)) {
          UpsetEnumerator walk(members_in(s, m0, m0 + c), s.minimal_generators(), m0, budget);
          std::size_t produced = 0;
          walk.run([&](std::vector<int> members) {
            ++produced;
            keep(ValueIdeal::from_value_set(ring, std::move(members), m0 + c));
          });
          budget -= produced;
        }
      }
      break;
    case IdealScope::ContainingConductor: {
      UpsetEnumerator walk(members_in(s, 0, c), s.minimal_generators(), std::nullopt,
                           options.max_candidates);
      walk.run([&](std::vector<int> members) {
        keep(ValueIdeal::from_value_set(ring, std::move(members), c));
      });
      break;
    }
    case IdealScope::Principal:
      if (options.shift_normalized) {
        keep(ValueIdeal::principal(ring, s.multiplicity()));
      } else {
        for (int a : members_in(s, 1, c + 1)) keep(ValueIdeal::principal(ring, a));
      }
      break;
  }
  std::sort(out.begin(), out.end(), generator_order_less);
  return out;
}

std::string_view verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Reflexive: return "reflexive";
    case Verdict::TraceIdeal: return "trace_ideal";
    case Verdict::TraceReflexive: return "trace_reflexive";
    case Verdict::IntegrallyClosed: return "integrally_closed";
    case Verdict::ContainsConductor: return "contains_conductor";
    case Verdict::EqualsMaximal: return "equals_maximal";
  }
  return "unknown";
}

std::optional<Verdict> verdict_from_name(std::string_view name) noexcept {
  for (Verdict v : kAllVerdicts) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

SearchRecord make_record(const ValueIdeal& ideal) {
  if (!ideal.is_integral()) {
    throw Error(ErrorKind::NotIntegral, "records describe ideals of R");
  }
  return make_record(ideal, ring_minimal_multiplicity(ideal.ring()));
}

SearchRecord recompute(const SearchRecord& record) {
  const SemigroupPtr ring = make_semigroup(record.semigroup);
  return make_record(ValueIdeal::from_exponents(ring, record.ideal));
}

SuiteOutcome check_trace_reflexive_smallcolength(const SemigroupPtr& ring) {
  SuiteOutcome out;
  if (ring->is_regular()) return out;
  const int len = ring->colength_of_conductor();
  const bool mm = is_minimal_multiplicity(ring);
  out.applicable = len <= 3 || (len == 4 && mm);
  if (!out.applicable) return out;

  IdealEnumerationOptions opts;
  opts.shift_normalized = false;
  opts.trace_only = true;
  for (const auto& j : enumerate_monomial_ideals(ring, opts)) {
    ++out.ideals_checked;
    if (!is_reflexive(j)) out.failures.push_back(make_record(j, mm));
  }
  return out;
}

SuiteOutcome check_trace_of_reflexive(const SemigroupPtr& ring) {
  SuiteOutcome out;
  if (ring->is_regular()) return out;
  const int len = ring->colength_of_conductor();
  const bool mm = is_minimal_multiplicity(ring);
  out.applicable = len == 4 || (len == 5 && mm);
  if (!out.applicable) return out;

  IdealEnumerationOptions opts;
  opts.reflexive_only = true;
  for (const auto& i : enumerate_monomial_ideals(ring, opts)) {
    ++out.ideals_checked;
    if (!is_reflexive(trace_ideal(i))) out.failures.push_back(make_record(i, mm));
  }
  return out;
}

SuiteOutcome check_integrally_closed_containing_conductor(const SemigroupPtr& ring) {
  SuiteOutcome out;
  if (ring->is_regular()) return out;
  out.applicable = true;
  const bool mm = is_minimal_multiplicity(ring);

  IdealEnumerationOptions over_conductor;
  over_conductor.scope = IdealScope::ContainingConductor;
  for (const auto& i : enumerate_monomial_ideals(ring, over_conductor)) {
    if (!(i == integral_closure(i))) continue;
    ++out.ideals_checked;
    if (!is_reflexive(i) || !is_trace_ideal(i)) out.failures.push_back(make_record(i, mm));
  }

  if (mm) {
    const ValueIdeal m = ValueIdeal::maximal(ring);
    IdealEnumerationOptions traces;
    traces.shift_normalized = false;
    traces.trace_only = true;
    for (const auto& i : enumerate_monomial_ideals(ring, traces)) {
      if (!(integral_closure(i) == m)) continue;
      ++out.ideals_checked;
      if (!(i == m)) out.failures.push_back(make_record(i, mm));
    }
  }
  return out;
}

CaseStudy analyze_case(const SemigroupPtr& ring, std::span<const int> ideal_generators) {
  const ValueIdeal ideal = ValueIdeal::from_exponents(ring, ideal_generators);
  const ValueIdeal d = dual(ideal);
  const ValueIdeal tr = product(d, ideal);
  const ValueIdeal tr_d = dual(tr);
  CaseStudy cs{
      .ring = ring,
      .colength_R_mod_C = ring->colength_of_conductor(),
      .minimal_multiplicity = ring_minimal_multiplicity(ring),
      .conductor = ValueIdeal::conductor(ring),
      .ideal = ideal,
      .dual = d,
      .double_dual = dual(d),
      .trace = tr,
      .trace_dual = tr_d,
      .trace_double_dual = dual(tr_d),
  };
  cs.reflexive = cs.ideal == cs.double_dual;
  cs.trace_is_trace_ideal = tr.is_integral() && tr == trace_ideal(tr);
  cs.trace_reflexive = tr == cs.trace_double_dual;
  return cs;
}

bool ReproductionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

ReproductionReport reproduce_counterexample(bool throw_on_mismatch) {
  const SemigroupPtr ring = make_semigroup({7, 8, 9, 11});
  const std::vector<int> i_gens{8, 9, 21};
  const std::vector<int> j_gens{8, 9};

  ReproductionReport report{
      .main = analyze_case(ring, i_gens),
      .auxiliary = analyze_case(ring, j_gens),
      .checks = {},
  };
  const CaseStudy& I = report.main;
  const CaseStudy& J = report.auxiliary;

  auto expect_set = [&](std::vector<int> members, int stable) {
    return ValueIdeal::from_value_set(ring, std::move(members), stable);
  };
  auto check = [&](std::string name, std::string value, bool pass) {
    report.checks.push_back({std::move(name), std::move(value), pass});
    if (!pass && throw_on_mismatch) {
      throw Error(ErrorKind::AssertionFailure,
                  report.checks.back().name + " mismatch, got " + report.checks.back().value);
    }
  };
  auto check_set = [&](std::string name, const ValueIdeal& got, const ValueIdeal& want) {
    check(std::move(name), got.to_string(), got == want);
  };
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };

  const ValueIdeal neg_one_zero_six = expect_set({-1, 0}, 6);
  const ValueIdeal eight_nine_fifteen = expect_set({8, 9}, 15);

  check("l(R/C)", std::to_string(I.colength_R_mod_C), I.colength_R_mod_C == 5);
  check("v(R) below c", join(ring->elements_below(ring->conductor())),
        ring->elements_below(ring->conductor()) == std::vector<int>{0, 7, 8, 9, 11});
  check("minimal multiplicity", yes_no(I.minimal_multiplicity), !I.minimal_multiplicity);
  check_set("v(C)", I.conductor, expect_set({}, 14));

  check_set("v(J*)", J.dual, neg_one_zero_six);
  check("J* generators", join(J.dual.minimal_generators()),
        J.dual.minimal_generators() == std::vector<int>{-1, 0, 12});
  check_set("v(J**)", J.double_dual, eight_nine_fifteen);
  check("J** generators", join(J.double_dual.minimal_generators()),
        J.double_dual.minimal_generators() == i_gens);
  check("J reflexive", yes_no(J.reflexive), !J.reflexive);

  check_set("v(I*)", I.dual, neg_one_zero_six);
  check_set("v(I**)", I.double_dual, eight_nine_fifteen);
  check("I reflexive", yes_no(I.reflexive), I.reflexive);

  check_set("v(tr I)", I.trace, expect_set({7, 8, 9}, 14));
  check("tr I generators", join(I.trace.minimal_generators()),
        I.trace.minimal_generators() == std::vector<int>{7, 8, 9});
  check("11 in v(tr I)", yes_no(I.trace.contains(11)), !I.trace.contains(11));

  check_set("v(tr(I)*)", I.trace_dual, expect_set({0}, 7));
  check_set("v(tr(I)**)", I.trace_double_dual, expect_set({7, 8, 9, 11}, 14));
  check("11 in v(tr(I)**)", yes_no(I.trace_double_dual.contains(11)),
        I.trace_double_dual.contains(11));
  check("tr(I)** = m", yes_no(I.trace_double_dual == ValueIdeal::maximal(ring)),
        I.trace_double_dual == ValueIdeal::maximal(ring));
  check("tr I reflexive", yes_no(I.trace_reflexive), !I.trace_reflexive);
  return report;
}

bool SearchFilters::admits(const NumericalSemigroup& semigroup) const {
  if (semigroup.is_regular()) return false;
  const int len = semigroup.colength_of_conductor();
  if (max_colength && len > *max_colength) return false;
  if (exact_colength && len != *exact_colength) return false;
  if (minimal_multiplicity_only && !is_minimal_multiplicity(semigroup)) return false;
  return true;
}

namespace {

struct RingSearch {
  std::vector<SearchRecord> records;
  SemigroupSummary summary;
};

RingSearch search_ring(const NumericalSemigroup& semigroup) {
  const SemigroupPtr ring = std::make_shared<const NumericalSemigroup>(semigroup);
  const bool mm = is_minimal_multiplicity(ring);
  RingSearch out;
  out.summary.generators = semigroup.minimal_generators();
  out.summary.genus = semigroup.genus();
  out.summary.colength_R_mod_C = semigroup.colength_of_conductor();
  out.summary.minimal_multiplicity = mm;

  for (const auto& i : enumerate_monomial_ideals(ring)) {
    ++out.summary.n_ideals;
    if (!is_reflexive(i)) continue;
    ++out.summary.n_reflexive;
    if (!is_reflexive(trace_ideal(i))) out.records.push_back(make_record(i, mm));
  }
  out.summary.n_counterexamples = out.records.size();

  IdealEnumerationOptions traces;
  traces.scope = IdealScope::ContainingConductor;
  traces.trace_only = true;
  const ValueIdeal unit = ValueIdeal::unit(ring);
  for (const auto& j : enumerate_monomial_ideals(ring, traces)) {
    if (!(j == unit)) ++out.summary.n_trace;
  }
  return out;
}

std::vector<NumericalSemigroup> sweep_rings(int max_genus, int ceiling) {
  if (max_genus < 1) {
    throw Error(ErrorKind::InvalidInput, "max_genus must be at least 1");
  }
  std::vector<NumericalSemigroup> rings;
  enumerate_semigroups(
      max_genus,
      [&](const NumericalSemigroup& s) {
        if (!s.is_regular()) rings.push_back(s);
      },
      ceiling);
  std::stable_sort(rings.begin(), rings.end(), report_order_less);
  return rings;
}

}  // namespace

SearchResult search_counterexamples(int max_genus, const SearchFilters& filters,
                                    unsigned threads, int genus_ceiling) {
  std::vector<NumericalSemigroup> rings;
  for (auto& s : sweep_rings(max_genus, genus_ceiling)) {
    if (filters.admits(s)) rings.push_back(std::move(s));
  }
  const auto per_ring = parallel_map<NumericalSemigroup, RingSearch>(
      rings, [](const NumericalSemigroup& s) { return search_ring(s); }, threads);
  SearchResult out;
  for (const auto& r : per_ring) {
    out.records.insert(out.records.end(), r.records.begin(), r.records.end());
    out.summaries.push_back(r.summary);
  }
  return out;
}

bool SweepReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const auto& s) { return s.failures.empty(); });
}

SweepReport run_theorem_suites(int max_genus, unsigned threads, int genus_ceiling) {
  using Suite = SuiteOutcome (*)(const SemigroupPtr&);
  struct Named {
    const char* name;
    Suite run;
  };
  static constexpr Named kSuites[] = {
      {"trace ideals reflexive at small colength", &check_trace_reflexive_smallcolength},
      {"trace of reflexive is reflexive", &check_trace_of_reflexive},
      {"integrally closed over conductor", &check_integrally_closed_containing_conductor},
  };

  const auto rings = sweep_rings(max_genus, genus_ceiling);
  const auto outcomes = parallel_map<NumericalSemigroup, std::vector<SuiteOutcome>>(
      rings,
      [](const NumericalSemigroup& s) {
        const SemigroupPtr ring = std::make_shared<const NumericalSemigroup>(s);
        std::vector<SuiteOutcome> out;
        for (const auto& suite : kSuites) out.push_back(suite.run(ring));
        return out;
      },
      threads);

  SweepReport report;
  report.rings = rings.size();
  for (std::size_t k = 0; k < std::size(kSuites); ++k) {
    SuiteTotals totals;
    totals.name = kSuites[k].name;
    for (const auto& per_ring : outcomes) {
      const SuiteOutcome& o = per_ring[k];
      if (o.applicable) ++totals.rings_applicable;
      totals.ideals_checked += o.ideals_checked;
      totals.failures.insert(totals.failures.end(), o.failures.begin(), o.failures.end());
    }
    report.suites.push_back(std::move(totals));
  }
  return report;
}

}  // namespace semitrace
