#include "sepmon/verify/suite.hpp"

#include <algorithm>
#include <chrono>

namespace sepmon::verify {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "unknown";
}

bool SuiteReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.status == Status::Fail; });
}

namespace {

std::optional<Failure> run_guarded(const CheckDef& def, const Case& c, std::size_t i) {
  try {
    return def.run_one(c, i);
  } catch (const std::exception& e) {
    return Failure{def.id + ".exception", e.what(), {"instance " + std::to_string(i)}, std::nullopt, std::nullopt,
                   std::nullopt};
  }
}

SuiteEnv make_env(const Case& c) {
  SuiteEnv env;
  const auto& cfg = c.config();
  env.group = cfg.group;
  env.group_order = c.group()->order();
  env.subgroup_generators = cfg.subgroup == "all" ? c.group()->generators() : parse_element_list(cfg.subgroup);
  env.subgroup_order = c.subgroup().order();
  env.index = c.index();
  env.field = cfg.field.spec();
  env.seed = cfg.seed;
  env.family_size = cfg.family_size;
  env.mutation = mutation_name(cfg.mutation);
  env.version = tool_version;
  return env;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& def : check_registry()) {
    if (def.id == id) return def;
  }
  throw ConfigError("unknown check id '" + id + "'");
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  const Case c(cfg);
  SuiteReport report;
  report.env = make_env(c);
  for (const auto& def : check_registry()) {
    if (!cfg.checks.empty() && std::find(cfg.checks.begin(), cfg.checks.end(), def.id) == cfg.checks.end()) continue;
    CheckRecord rec;
    rec.id = def.id;
    const auto start = std::chrono::steady_clock::now();
    std::size_t count = 0;
    try {
      if (const std::size_t need = def.footprint(c); need > dense_dim_limit) {
        rec.status = Status::Skip;
        rec.skip_reason = "needs representations of dimension " + std::to_string(need) + ", above the dense limit " +
                          std::to_string(dense_dim_limit);
      } else {
        count = def.count(c);
      }
    } catch (const std::exception& e) {
      rec.status = Status::Fail;
      rec.failure = Failure{def.id + ".exception", e.what(), {"family construction"}, std::nullopt, std::nullopt,
                            std::nullopt};
    }
    if (!rec.failure && count == 0) {
      rec.status = Status::Skip;
      if (rec.skip_reason.empty()) rec.skip_reason = "no instances";
    }
    for (std::size_t i = 0; i < count; ++i) {
      ++rec.cases;
      if (auto f = run_guarded(def, c, i)) {
        rec.status = Status::Fail;
        rec.failed_case = i;
        rec.failure = std::move(f);
        break;
      }
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(rec));
  }
  report.notes = c.notes();
  return report;
}

std::optional<Failure> replay(const SuiteConfig& cfg, const std::string& check_id, std::size_t case_index) {
  const auto& def = find_check(check_id);
  const Case c(cfg);
  const std::size_t count = def.count(c);
  if (case_index >= count) {
    throw ConfigError("check '" + check_id + "' has " + std::to_string(count) + " instances");
  }
  return run_guarded(def, c, case_index);
}

std::vector<MutationOutcome> mutation_smoke(const SuiteConfig& cfg) {
  std::vector<MutationOutcome> out;
  for (auto m : {Mutation::Mu, Mutation::Xi, Mutation::Action}) {
    SuiteConfig mutated = cfg;
    mutated.mutation = m;
    MutationOutcome o;
    o.mutation = m;
    o.report = run_suite(mutated);
    for (const auto& rec : o.report.checks) {
      if (rec.status != Status::Fail || !rec.failure) continue;
      o.detected = true;
      o.first_failure = rec.id + ": " + rec.failure->law;
      auto again = replay(mutated, rec.id, rec.failed_case);
      o.replay_reproduced = again && again->law == rec.failure->law && again->message == rec.failure->message;
      break;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace sepmon::verify
