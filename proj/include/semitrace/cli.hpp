#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semitrace/verifier.hpp"

namespace semitrace::cli {

enum class Command { Info, Ideal, Verify, Search, Reproduce };
enum class OutputFormat { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct CliConfig {
  Command command = Command::Info;
  std::vector<int> semigroup;
  std::optional<std::vector<int>> ideal_gens;
  std::optional<int> max_genus;
  SearchFilters filters;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Text;
  unsigned threads = 0;
};

/// Limits read from SEMITRACE_MAX_GENUS and SEMITRACE_MAX_WINDOW.
struct ResourceCeilings {
  int max_genus = kDefaultMaxGenusCeiling;
  int max_window = 4096;

  static ResourceCeilings from_environment();
};

/// Command-specific checks; throws Error(InvalidInput) with a diagnostic.
void validate(const CliConfig& config);

/// Executes a validated config, writing the report to `out` (or the output
/// path) and diagnostics to `err`. Returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err,
        const ResourceCeilings& ceilings = ResourceCeilings::from_environment());

/// Parses argv (CLI11), validates and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitrace::cli
