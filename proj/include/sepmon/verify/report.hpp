#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sepmon/verify/suite.hpp"

namespace sepmon::verify {

inline constexpr int report_schema_version = 1;
/// Matrices larger than this in either dimension are reported by shape only.
inline constexpr std::size_t report_matrix_limit = 64;

/// {"version":1,"env":{...},"checks":[...]}. With timing disabled the
/// output depends only on the configuration.
nlohmann::ordered_json report_json(const SuiteReport& r, bool timing = true);
std::string render_text(const SuiteReport& r);

nlohmann::ordered_json mutation_json(const std::vector<MutationOutcome>& outcomes, bool timing = true);
std::string render_mutation_text(const std::vector<MutationOutcome>& outcomes);

nlohmann::ordered_json failure_json(const Failure& f);

}  // namespace sepmon::verify
