#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semitrace/verifier.hpp"

namespace semitrace {

using json = nlohmann::json;

/// {"generators":[…],"frobenius":F,"genus":g,"conductor":c}
json to_json(const NumericalSemigroup& semigroup);

/// {"min":m0,"stable":b,"members":[…],"generators":[…]}
json to_json(const ValueIdeal& ideal);

/// Inverse of to_json(ValueIdeal); validates closure and that the stored
/// min and generators agree with the value set. Throws InvalidInput or
/// ClosureViolation.
ValueIdeal ideal_from_json(const SemigroupPtr& ring, const json& report);

/// Named verdicts of a profile in a fixed order; nullopt where undefined
/// (I ⊄ R). Text and JSON renderings both come from this list.
std::vector<std::pair<std::string, std::optional<bool>>> profile_verdicts(
    const IdealProfile& profile);

/// Flat object: semigroup, value sets in report form, verdicts, colength.
json to_json(const IdealProfile& profile);

json to_json(const SearchRecord& record);
SearchRecord record_from_json(const json& line);

std::string summary_csv_header();
std::string summary_csv_row(const SemigroupSummary& summary);

}  // namespace semitrace
