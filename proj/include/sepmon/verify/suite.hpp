#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepmon/eilenberg/modules.hpp"
#include "sepmon/verify/config.hpp"

namespace sepmon::verify {

using exactlin::Field;
using exactlin::Matrix;
using repcat::Morphism;
using repcat::Rep;

inline constexpr const char* tool_version = "0.1.0";

/// Why one instance of a check failed.
struct Failure {
  std::string law;
  std::string message;
  /// Descriptions of the objects involved.
  std::vector<std::string> objects;
  std::optional<Matrix> lhs;
  std::optional<Matrix> rhs;
  std::optional<exactlin::EntryDiff> diff;
};

struct NamedModule {
  std::string kind;  // "free", "comparison" or "summand"
  eilenberg::AModule module;
};

/// Everything one (G, H, field, seed) run needs. Families are generated
/// deterministically from the seed on first use.
class Case {
 public:
  explicit Case(const SuiteConfig& cfg);
  Case(const Case&) = delete;
  Case& operator=(const Case&) = delete;

  const SuiteConfig& config() const { return cfg_; }
  const groups::GroupPtr& group() const { return group_; }
  const groups::Subgroup& subgroup() const { return subgroup_; }
  const groups::CosetSpace& cosets() const { return cosets_; }
  Field field() const { return cfg_.field; }
  std::size_t index() const { return cosets_.index(); }

  /// The standard ring (corrupted under Mutation::Mu).
  const eilenberg::RingPtr& standard_ring() const { return standard_; }
  /// The section xi (corrupted under Mutation::Xi).
  Morphism xi(const Rep& n) const;

  /// Representations of G with dimension at most 12 (less for index above
  /// 6). Under
  /// Mutation::Action the first one is corrupted.
  const std::vector<Rep>& g_reps() const;
  const std::vector<Rep>& h_reps() const;
  /// Smaller representations of G for triple composites of Coind Res.
  const std::vector<Rep>& monad_reps() const;
  /// Representations of G of dimension at most 4.
  const std::vector<Rep>& tiny_reps() const;
  /// Representations of H small enough for the composite form of lambda.
  const std::vector<Rep>& small_h_reps() const;
  /// (y over H, x over G) pairs for the projection formula.
  const std::vector<std::pair<Rep, Rep>>& pi_pairs() const;
  /// g_reps[i] -> g_reps[i+1] and likewise over H.
  const std::vector<Morphism>& g_morphisms() const;
  const std::vector<Morphism>& h_morphisms() const;
  /// Free modules, comparison modules and idempotent summands.
  const std::vector<NamedModule>& modules() const;

  std::uint64_t sub_seed(std::uint64_t tag, std::size_t i) const;

  /// Counters describing how the run went (module kinds, fallbacks taken).
  void note(const std::string& key) const { ++notes_[key]; }
  const std::map<std::string, std::size_t>& notes() const { return notes_; }

 private:
  std::vector<Rep> make_reps(const groups::GroupPtr& g, std::uint64_t tag, std::size_t count,
                             std::size_t max_dim) const;

  SuiteConfig cfg_;
  groups::GroupPtr group_;
  groups::Subgroup subgroup_;
  groups::CosetSpace cosets_;
  eilenberg::RingPtr standard_;

  mutable std::optional<std::vector<Rep>> g_reps_, h_reps_, monad_reps_, tiny_reps_, small_h_reps_;
  mutable std::optional<std::vector<std::pair<Rep, Rep>>> pi_pairs_;
  mutable std::optional<std::vector<Morphism>> g_morphisms_, h_morphisms_;
  mutable std::optional<std::vector<NamedModule>> modules_;
  mutable std::map<std::string, std::size_t> notes_;
};

/// Representations are stored densely, so a check whose largest
/// intermediate representation is bigger than this is skipped.
inline constexpr std::size_t dense_dim_limit = 3456;

struct CheckDef {
  std::string id;
  std::string description;
  std::function<std::size_t(const Case&)> count;
  std::function<std::optional<Failure>(const Case&, std::size_t)> run_one;
  /// Upper bound on the dimension of the representations the check builds.
  std::function<std::size_t(const Case&)> footprint;
};

/// All checks in execution order.
const std::vector<CheckDef>& check_registry();
const std::vector<std::string>& check_ids();

enum class Status { Pass, Fail, Skip };
std::string status_name(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  std::size_t cases = 0;
  /// Instance that failed.
  std::size_t failed_case = 0;
  std::optional<Failure> failure;
  std::string skip_reason;
  double ms = 0;
};

struct SuiteEnv {
  std::string group;
  std::size_t group_order = 0;
  std::vector<groups::Element> subgroup_generators;
  std::size_t subgroup_order = 0;
  std::size_t index = 0;
  std::string field;
  std::uint64_t seed = 0;
  std::size_t family_size = 0;
  std::string mutation;
  std::string version;
};

struct SuiteReport {
  SuiteEnv env;
  std::vector<CheckRecord> checks;
  /// Case::notes() after the run.
  std::map<std::string, std::size_t> notes;
  bool all_passed() const;
};

/// Runs the enabled checks in registry order. Throws ConfigError for an
/// invalid configuration.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Re-runs one instance of one check from scratch.
std::optional<Failure> replay(const SuiteConfig& cfg, const std::string& check_id, std::size_t case_index);

struct MutationOutcome {
  Mutation mutation = Mutation::None;
  SuiteReport report;
  /// Some check failed with a witness.
  bool detected = false;
  /// Replaying the first failure reproduced it.
  bool replay_reproduced = false;
  std::string first_failure;
};

/// Runs the suite once per corruption.
std::vector<MutationOutcome> mutation_smoke(const SuiteConfig& cfg);

}  // namespace sepmon::verify
