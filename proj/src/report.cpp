#include "semitrace/report.hpp"

#include <sstream>

#include "semitrace/error.hpp"

namespace semitrace {

json to_json(const NumericalSemigroup& semigroup) {
  return {
      {"generators", semigroup.minimal_generators()},
      {"frobenius", semigroup.frobenius()},
      {"genus", semigroup.genus()},
      {"conductor", semigroup.conductor()},
  };
}

json to_json(const ValueIdeal& ideal) {
  return {
      {"min", ideal.min_value()},
      {"stable", ideal.stable_bound()},
      {"members", ideal.window_members()},
      {"generators", ideal.minimal_generators()},
  };
}

ValueIdeal ideal_from_json(const SemigroupPtr& ring, const json& report) {
  try {
    auto members = report.at("members").get<std::vector<int>>();
    const int stable = report.at("stable").get<int>();
    ValueIdeal ideal = ValueIdeal::from_value_set(ring, std::move(members), stable);
    if (report.contains("min") && report.at("min").get<int>() != ideal.min_value()) {
      throw Error(ErrorKind::InvalidInput, "\"min\" disagrees with the value set");
    }
    if (report.contains("generators") &&
        report.at("generators").get<std::vector<int>>() != ideal.minimal_generators()) {
      throw Error(ErrorKind::InvalidInput, "\"generators\" disagree with the value set");
    }
    return ideal;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ideal report: ") + e.what());
  }
}

std::vector<std::pair<std::string, std::optional<bool>>> profile_verdicts(
    const IdealProfile& p) {
  return {
      {"is_reflexive", p.is_reflexive},
      {"is_trace_ideal", p.is_trace_ideal},
      {"is_integrally_closed", p.is_integrally_closed},
      {"partial_trace_criterion", p.partial_trace_criterion},
      {"is_stable", p.is_stable},
  };
}

json to_json(const IdealProfile& p) {
  json out{
      {"semigroup", to_json(p.ideal.semigroup())},
      {"ideal", to_json(p.ideal)},
      {"dual", to_json(p.dual)},
      {"double_dual", to_json(p.double_dual)},
      {"trace", to_json(p.trace)},
      {"closure", p.closure ? to_json(*p.closure) : json(nullptr)},
      {"colength_in_R", p.colength_in_ring ? json(*p.colength_in_ring) : json(nullptr)},
  };
  for (const auto& [name, value] : profile_verdicts(p)) {
    out[name] = value ? json(*value) : json(nullptr);
  }
  return out;
}

json to_json(const SearchRecord& r) {
  return {
      {"semigroup", r.semigroup},
      {"ideal", r.ideal},
      {"verdicts", r.verdicts},
      {"colength_R_mod_C", r.colength_R_mod_C},
      {"minimal_multiplicity", r.minimal_multiplicity},
      {"genus", r.genus},
  };
}

SearchRecord record_from_json(const json& line) {
  try {
    SearchRecord r;
    r.semigroup = line.at("semigroup").get<std::vector<int>>();
    r.ideal = line.at("ideal").get<std::vector<int>>();
    r.verdicts = line.at("verdicts").get<std::map<std::string, bool>>();
    r.colength_R_mod_C = line.at("colength_R_mod_C").get<int>();
    r.minimal_multiplicity = line.at("minimal_multiplicity").get<bool>();
    r.genus = line.at("genus").get<int>();
    for (const auto& [name, value] : r.verdicts) {
      if (!verdict_from_name(name)) {
        throw Error(ErrorKind::InvalidInput, "unknown verdict '" + name + "'");
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed search record: ") + e.what());
  }
}

std::string summary_csv_header() {
  return "generators,genus,colength_R_mod_C,min_mult,n_ideals,n_reflexive,n_trace,"
         "n_counterexamples";
}

std::string summary_csv_row(const SemigroupSummary& s) {
  std::ostringstream os;
  os << '"';
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) os << ',';
    os << s.generators[i];
  }
  os << "\"," << s.genus << ',' << s.colength_R_mod_C << ','
     << (s.minimal_multiplicity ? "true" : "false") << ',' << s.n_ideals << ','
     << s.n_reflexive << ',' << s.n_trace << ',' << s.n_counterexamples;
  return os.str();
}

}  // namespace semitrace
