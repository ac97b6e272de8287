#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepmon/exactlin/field.hpp"
#include "sepmon/groups/finite_group.hpp"

namespace sepmon::verify {

/// Invalid user configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { Json, Text };

/// Deliberate corruptions for negative controls.
enum class Mutation {
  None,
  Mu,      // mu(e_0 (x) e_0) := 0 in the standard ring
  Xi,      // the (0,0) entry of every xi is zeroed
  Action,  // one entry of one family representation's action is changed
};

std::string mutation_name(Mutation m);

struct SuiteConfig {
  std::string group = "s3";
  /// Comma-separated element indices; empty for the trivial subgroup and
  /// "all" for the whole group.
  std::string subgroup;
  exactlin::Field field;
  std::uint64_t seed = 1;
  std::size_t family_size = 10;
  /// Check ids to run; empty means all.
  std::vector<std::string> checks;
  ReportFormat format = ReportFormat::Json;
  Mutation mutation = Mutation::None;
};

/// Parses "0,3,5" (spaces allowed).
std::vector<groups::Element> parse_element_list(const std::string& text);

/// Parses "all" or a comma-separated list of check ids.
std::vector<std::string> parse_check_list(const std::string& text);

/// Static validation; group-dependent checks happen when the case is built.
void validate(const SuiteConfig& cfg);

}  // namespace sepmon::verify
