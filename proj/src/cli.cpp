#include "semitrace/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semitrace/error.hpp"
#include "semitrace/report.hpp"

namespace semitrace::cli {

namespace {

std::optional<int> env_int(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used == std::string(raw).size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, std::string(name) + " must be an integer");
}

std::string list_text(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

SemigroupPtr checked_semigroup(const std::vector<int>& gens, const ResourceCeilings& ceilings) {
  SemigroupPtr ring = make_semigroup(gens);
  if (ring->conductor() > ceilings.max_window) {
    throw Error(ErrorKind::ResourceLimit, "conductor " + std::to_string(ring->conductor()) +
                                              " exceeds window ceiling " +
                                              std::to_string(ceilings.max_window));
  }
  return ring;
}

int checked_genus(const CliConfig& config, const ResourceCeilings& ceilings) {
  const int g = config.max_genus.value_or(9);
  if (g > ceilings.max_genus) {
    throw Error(ErrorKind::ResourceLimit, "max genus " + std::to_string(g) +
                                              " exceeds ceiling " +
                                              std::to_string(ceilings.max_genus));
  }
  return g;
}

void unsupported_format(const char* command) {
  throw Error(ErrorKind::InvalidInput,
              std::string("format not supported by '") + command + "'");
}

int run_info(const CliConfig& config, std::ostream& out, const ResourceCeilings& ceilings) {
  const SemigroupPtr ring = checked_semigroup(config.semigroup, ceilings);
  std::optional<bool> mm;
  if (!ring->is_regular()) mm = is_minimal_multiplicity(ring);
  const int len = ring->colength_of_conductor();

  switch (config.format) {
    case OutputFormat::Text:
      out << "semigroup " << ring->to_string() << '\n'
          << "frobenius: " << ring->frobenius() << '\n'
          << "conductor: " << ring->conductor() << '\n'
          << "genus: " << ring->genus() << '\n'
          << "multiplicity: " << ring->multiplicity() << '\n'
          << "embedding dimension: " << ring->embedding_dimension() << '\n'
          << "l(R/C): " << len << '\n'
          << "minimal multiplicity: " << (mm ? bool_text(*mm) : "n/a (regular ring)") << '\n'
          << "v(R): " << ValueIdeal::unit(ring).to_string() << '\n';
      break;
    case OutputFormat::Json: {
      json j = to_json(*ring);
      j["multiplicity"] = ring->multiplicity();
      j["embedding_dimension"] = ring->embedding_dimension();
      j["colength_R_mod_C"] = len;
      j["minimal_multiplicity"] = mm ? json(*mm) : json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "generators,frobenius,conductor,genus,multiplicity,embedding_dimension,"
             "colength_R_mod_C,min_mult\n"
          << '"' << list_text(ring->minimal_generators()) << "\"," << ring->frobenius() << ','
          << ring->conductor() << ',' << ring->genus() << ',' << ring->multiplicity() << ','
          << ring->embedding_dimension() << ',' << len << ','
          << (mm ? bool_text(*mm) : "") << '\n';
      break;
  }
  return kExitOk;
}

int run_ideal(const CliConfig& config, std::ostream& out, const ResourceCeilings& ceilings) {
  const SemigroupPtr ring = checked_semigroup(config.semigroup, ceilings);
  const auto& gens = *config.ideal_gens;
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  if (*hi - *lo > ceilings.max_window) {
    throw Error(ErrorKind::ResourceLimit, "generator span exceeds window ceiling");
  }
  const IdealProfile p = profile(ValueIdeal::from_exponents(ring, gens));

  if (config.format == OutputFormat::Json) {
    out << to_json(p).dump() << '\n';
    return kExitOk;
  }
  if (config.format == OutputFormat::Csv) unsupported_format("ideal");

  auto row = [&](const char* label, const ValueIdeal& v) {
    out << "  " << std::left << std::setw(12) << label << v.to_string() << "   generators "
        << list_text(v.minimal_generators()) << '\n';
  };
  out << "semigroup " << ring->to_string() << "  F=" << ring->frobenius()
      << " c=" << ring->conductor() << '\n';
  out << "ideal (" << list_text(p.generators) << ")\n";
  row("v(I)", p.ideal);
  row("v(I*)", p.dual);
  row("v(I**)", p.double_dual);
  row("v(tr I)", p.trace);
  if (p.closure) row("v(cl I)", *p.closure);
  if (p.colength_in_ring) out << "  l(R/I)      " << *p.colength_in_ring << '\n';
  out << "verdicts\n";
  for (const auto& [name, value] : profile_verdicts(p)) {
    out << "  " << std::left << std::setw(24) << name
        << (value ? bool_text(*value) : "n/a (ideal not in R)") << '\n';
  }
  return kExitOk;
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err,
               const ResourceCeilings& ceilings) {
  if (config.format == OutputFormat::Csv) unsupported_format("verify");
  const int max_genus = checked_genus(config, ceilings);
  const SweepReport report = run_theorem_suites(max_genus, config.threads, ceilings.max_genus);

  if (config.format == OutputFormat::Json) {
    json suites = json::array();
    for (const auto& s : report.suites) {
      json failures = json::array();
      for (const auto& f : s.failures) failures.push_back(to_json(f));
      suites.push_back({{"name", s.name},
                        {"rings_applicable", s.rings_applicable},
                        {"ideals_checked", s.ideals_checked},
                        {"failures", failures},
                        {"pass", s.failures.empty()}});
    }
    out << json{{"scope", kMonomialScopeBanner},
                {"max_genus", max_genus},
                {"rings", report.rings},
                {"suites", suites},
                {"pass", report.passed()}}
               .dump()
        << '\n';
  } else {
    out << kMonomialScopeBanner << '\n'
        << "rings swept: " << report.rings << " (genus <= " << max_genus << ")\n";
    for (const auto& s : report.suites) {
      out << (s.failures.empty() ? "PASS  " : "FAIL  ") << s.name
          << "  rings=" << s.rings_applicable << " ideals=" << s.ideals_checked
          << " failures=" << s.failures.size() << '\n';
      for (const auto& f : s.failures) out << "  failure " << to_json(f).dump() << '\n';
    }
    out << "RESULT: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& s : report.suites) {
    if (!s.failures.empty()) err << "suite failed: " << s.name << '\n';
  }
  return report.passed() ? kExitOk : kExitSuiteFailed;
}

int run_search(const CliConfig& config, std::ostream& out, const ResourceCeilings& ceilings) {
  const int max_genus = checked_genus(config, ceilings);
  const SearchResult result =
      search_counterexamples(max_genus, config.filters, config.threads, ceilings.max_genus);

  switch (config.format) {
    case OutputFormat::Json:
      for (const auto& r : result.records) out << to_json(r).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << summary_csv_header() << '\n';
      for (const auto& s : result.summaries) out << summary_csv_row(s) << '\n';
      break;
    case OutputFormat::Text:
      out << kMonomialScopeBanner << '\n';
      for (const auto& r : result.records) {
        out << "<" << list_text(r.semigroup) << ">  I=(" << list_text(r.ideal)
            << ")  genus=" << r.genus << " l(R/C)=" << r.colength_R_mod_C
            << " min_mult=" << bool_text(r.minimal_multiplicity) << '\n';
      }
      out << result.records.size() << " reflexive ideal(s) with non-reflexive trace over "
          << result.summaries.size() << " ring(s), genus <= " << max_genus << '\n';
      break;
  }
  return kExitOk;
}

int run_reproduce(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::Csv) unsupported_format("reproduce-paper");
  const ReproductionReport report = reproduce_counterexample(false);

  if (config.format == OutputFormat::Json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"value", c.value}, {"pass", c.pass}});
    }
    out << json{{"semigroup", to_json(*report.main.ring)},
                {"ideal", to_json(report.main.ideal)},
                {"checks", checks},
                {"pass", report.passed()}}
               .dump()
        << '\n';
  } else {
    out << "R = k[[t^7,t^8,t^9,t^11]], I = (t^8,t^9,t^21), J = (t^8,t^9)\n";
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << c.name << c.value
          << '\n';
    }
    out << "RESULT: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& c : report.checks) {
    if (!c.pass) {
      err << "check failed: " << c.name << '\n';
      return kExitSuiteFailed;
    }
  }
  return kExitOk;
}

}  // namespace

ResourceCeilings ResourceCeilings::from_environment() {
  ResourceCeilings c;
  if (auto g = env_int("SEMITRACE_MAX_GENUS")) c.max_genus = *g;
  if (auto w = env_int("SEMITRACE_MAX_WINDOW")) c.max_window = *w;
  return c;
}

void validate(const CliConfig& config) {
  switch (config.command) {
    case Command::Info:
      if (config.semigroup.empty()) throw Error(ErrorKind::InvalidInput, "info needs a semigroup");
      break;
    case Command::Ideal:
      if (config.semigroup.empty()) {
        throw Error(ErrorKind::InvalidInput, "ideal needs a semigroup");
      }
      if (!config.ideal_gens || config.ideal_gens->empty()) {
        throw Error(ErrorKind::InvalidInput, "ideal needs --gens");
      }
      break;
    case Command::Verify:
    case Command::Search:
      if (config.max_genus && *config.max_genus < 1) {
        throw Error(ErrorKind::InvalidInput, "--max-genus must be at least 1");
      }
      break;
    case Command::Reproduce:
      break;
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err,
        const ResourceCeilings& ceilings) {
  try {
    validate(config);
    std::ofstream file;
    std::ostream* sink = &out;
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) {
        throw Error(ErrorKind::InvalidInput, "cannot open " + *config.output_path);
      }
      sink = &file;
    }
    switch (config.command) {
      case Command::Info: return run_info(config, *sink, ceilings);
      case Command::Ideal: return run_ideal(config, *sink, ceilings);
      case Command::Verify: return run_verify(config, *sink, err, ceilings);
      case Command::Search: return run_search(config, *sink, ceilings);
      case Command::Reproduce: return run_reproduce(config, *sink, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ResourceLimit ? kExitResource : kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trace and reflexivity calculator for numerical semigroup rings"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  std::string output;
  std::string semigroup_text;
  std::string gens_text;
  int max_genus = 9;
  std::optional<int> exact_colength;
  std::optional<int> max_colength;

  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output, "write the report to a file");
  app.add_option("--threads", config.threads, "worker threads (0 = all cores)");

  auto* info = app.add_subcommand("info", "semigroup invariants");
  info->add_option("semigroup", semigroup_text, "generators, e.g. 7,8,9,11")->required();

  auto* ideal = app.add_subcommand("ideal", "profile of a monomial ideal");
  ideal->add_option("semigroup", semigroup_text, "generators, e.g. 7,8,9,11")->required();
  ideal->add_option("--gens", gens_text, "ideal exponents, e.g. 8,9,21")->required();

  auto* verify = app.add_subcommand("verify", "run the asserting suites over all rings");
  verify->add_option("--max-genus", max_genus, "genus bound")->capture_default_str();

  auto* search = app.add_subcommand("search", "reflexive ideals whose trace is not reflexive");
  search->add_option("--max-genus", max_genus, "genus bound")->capture_default_str();
  search->add_flag("--min-mult", config.filters.minimal_multiplicity_only,
                   "only rings of minimal multiplicity");
  search->add_option("--colength", exact_colength, "only rings with l(R/C) = N");
  search->add_option("--max-colength", max_colength, "only rings with l(R/C) <= N");

  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "recompute the k[[t^7,t^8,t^9,t^11]] counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) config.command = Command::Info;
    if (ideal->parsed()) config.command = Command::Ideal;
    if (verify->parsed()) config.command = Command::Verify;
    if (search->parsed()) config.command = Command::Search;
    if (reproduce->parsed()) config.command = Command::Reproduce;
    if (!semigroup_text.empty()) config.semigroup = parse_exponent_list(semigroup_text);
    if (!gens_text.empty()) config.ideal_gens = parse_exponent_list(gens_text);
    if (verify->parsed() || search->parsed()) config.max_genus = max_genus;
    config.filters.exact_colength = exact_colength;
    config.filters.max_colength = max_colength;
    if (!output.empty()) config.output_path = output;
    config.format = format == "json"  ? OutputFormat::Json
                    : format == "csv" ? OutputFormat::Csv
                                      : OutputFormat::Text;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace semitrace::cli
