#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitrace/trace.hpp"

namespace semitrace {

/// All theorem checks quantify over monomial ideals only. A clean sweep
/// corroborates the statements on that subclass; it cannot refute them.
inline constexpr std::string_view kMonomialScopeBanner =
    "scope: monomial ideals of numerical semigroup rings only "
    "(necessary-condition checks, not proofs)";

enum class IdealScope {
  /// Shift-normalized: one representative per class of monomial fractional
  /// ideals. Otherwise: every monomial I ⊆ m with min v(I) <= c, which
  /// includes every regular trace ideal since those contain C.
  ProperRegular,
  /// C ⊆ I ⊆ R, including C and R. Shift normalization does not apply.
  ContainingConductor,
  /// Principal ideals t^a R: a single class when normalized, otherwise
  /// 0 < a <= c.
  Principal,
};

struct IdealEnumerationOptions {
  IdealScope scope = IdealScope::ProperRegular;
  bool reflexive_only = false;
  /// Keeps emitted ideals equal to their own trace.
  bool trace_only = false;
  bool shift_normalized = true;
  /// Throws ResourceLimit once more candidates than this are generated.
  std::size_t max_candidates = std::size_t{1} << 20;
};

/// Position chosen for each shift class: the shift a with t^a I ⊆ m that
/// minimizes ℓ(R / t^a I), smallest a on ties. For non-principal classes this
/// is the monomial partial trace position.
ValueIdeal canonical_shift(const ValueIdeal& ideal);

/// Ideals of a non-regular ring, sorted by their minimal generator tuples.
/// Throws RegularRing or ResourceLimit.
std::vector<ValueIdeal> enumerate_monomial_ideals(const SemigroupPtr& ring,
                                                  const IdealEnumerationOptions& options = {});

enum class Verdict {
  Reflexive,
  TraceIdeal,
  TraceReflexive,
  IntegrallyClosed,
  ContainsConductor,
  EqualsMaximal,
};

inline constexpr Verdict kAllVerdicts[] = {
    Verdict::Reflexive,         Verdict::TraceIdeal,        Verdict::TraceReflexive,
    Verdict::IntegrallyClosed, Verdict::ContainsConductor, Verdict::EqualsMaximal,
};

std::string_view verdict_name(Verdict verdict) noexcept;
std::optional<Verdict> verdict_from_name(std::string_view name) noexcept;

struct SearchRecord {
  std::vector<int> semigroup;  // minimal generators
  std::vector<int> ideal;      // minimal generators of the ideal
  std::map<std::string, bool> verdicts;
  int colength_R_mod_C = 0;
  bool minimal_multiplicity = false;
  int genus = 0;

  bool operator==(const SearchRecord&) const = default;
};

/// Evaluates every registered verdict for an ideal I ⊆ R.
SearchRecord make_record(const ValueIdeal& ideal);
/// Rebuilds the ring and ideal named by a record and evaluates it afresh.
SearchRecord recompute(const SearchRecord& record);

struct SuiteOutcome {
  /// Whether the statement's hypotheses on the ring hold, i.e. anything was
  /// asserted at all.
  bool applicable = false;
  std::size_t ideals_checked = 0;
  std::vector<SearchRecord> failures;
};

/// Proper regular trace ideals are reflexive when ℓ(R/C) <= 3, or when
/// ℓ(R/C) = 4 and R has minimal multiplicity.
SuiteOutcome check_trace_reflexive_smallcolength(const SemigroupPtr& ring);

/// tr(I) is reflexive for reflexive regular I when ℓ(R/C) = 4, or when
/// ℓ(R/C) = 5 and R has minimal multiplicity.
SuiteOutcome check_trace_of_reflexive(const SemigroupPtr& ring);

/// Integrally closed ideals containing C are reflexive trace ideals; with
/// minimal multiplicity, a proper regular trace ideal with Ī = m equals m.
SuiteOutcome check_integrally_closed_containing_conductor(const SemigroupPtr& ring);

/// Value sets of the rank-one counterexample computation for one ring/ideal.
struct CaseStudy {
  SemigroupPtr ring;
  int colength_R_mod_C = 0;
  bool minimal_multiplicity = false;
  ValueIdeal conductor;
  ValueIdeal ideal;
  ValueIdeal dual;
  ValueIdeal double_dual;
  ValueIdeal trace;
  ValueIdeal trace_dual;
  ValueIdeal trace_double_dual;
  bool reflexive = false;
  bool trace_is_trace_ideal = false;
  bool trace_reflexive = false;
};

CaseStudy analyze_case(const SemigroupPtr& ring, std::span<const int> ideal_generators);

struct ReproductionCheck {
  std::string name;
  std::string value;
  bool pass = false;
};

struct ReproductionReport {
  CaseStudy main;        // k[[t^7,t^8,t^9,t^11]], I = (t^8, t^9, t^21)
  CaseStudy auxiliary;   // same ring, J = (t^8, t^9)
  std::vector<ReproductionCheck> checks;
  bool passed() const;
};

/// Recomputes the counterexample in k[[t^7,t^8,t^9,t^11]] and compares every
/// value set against the frozen expected sets. Throws AssertionFailure naming
/// the first mismatch when `throw_on_mismatch` is set.
ReproductionReport reproduce_counterexample(bool throw_on_mismatch = true);

struct SearchFilters {
  bool minimal_multiplicity_only = false;
  std::optional<int> max_colength;
  std::optional<int> exact_colength;

  bool admits(const NumericalSemigroup& semigroup) const;
};

/// Per-ring counts for the summary CSV.
struct SemigroupSummary {
  std::vector<int> generators;
  int genus = 0;
  int colength_R_mod_C = 0;
  bool minimal_multiplicity = false;
  std::size_t n_ideals = 0;  // shift classes enumerated
  std::size_t n_reflexive = 0;
  std::size_t n_trace = 0;   // proper regular trace ideals of R
  std::size_t n_counterexamples = 0;
};

struct SearchResult {
  std::vector<SearchRecord> records;
  std::vector<SemigroupSummary> summaries;
};

/// Reflexive regular monomial I (up to shift) whose trace is not reflexive,
/// over every non-regular ring of genus <= max_genus passing `filters`.
/// Deterministic order whatever the thread count. Throws ResourceLimit.
SearchResult search_counterexamples(int max_genus, const SearchFilters& filters = {},
                                    unsigned threads = 0,
                                    int genus_ceiling = kDefaultMaxGenusCeiling);

struct SuiteTotals {
  std::string name;
  std::size_t rings_applicable = 0;
  std::size_t ideals_checked = 0;
  std::vector<SearchRecord> failures;
};

struct SweepReport {
  std::size_t rings = 0;  // non-regular rings swept
  std::vector<SuiteTotals> suites;
  bool passed() const;
};

/// Runs every asserting suite over all non-regular rings of genus <= max_genus.
SweepReport run_theorem_suites(int max_genus, unsigned threads = 0,
                               int genus_ceiling = kDefaultMaxGenusCeiling);

/// Maps `work` over `items` on up to `threads` workers (0 = hardware
/// concurrency); results keep the input order.
template <typename T, typename R>
std::vector<R> parallel_map(const std::vector<T>& items, const std::function<R(const T&)>& work,
                            unsigned threads);

}  // namespace semitrace

#include "semitrace/detail/parallel_map.hpp"
