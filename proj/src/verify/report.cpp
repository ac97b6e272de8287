#include "sepmon/verify/report.hpp"

#include <cstdio>
#include <sstream>

namespace sepmon::verify {

namespace {

using nlohmann::ordered_json;

ordered_json matrix_json(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  if (m.rows() <= report_matrix_limit && m.cols() <= report_matrix_limit) j["entries"] = m.to_strings();
  return j;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

ordered_json failure_json(const Failure& f) {
  ordered_json j;
  j["law"] = f.law;
  j["message"] = f.message;
  j["objects"] = f.objects;
  if (f.diff) {
    j["diff"] = {{"row", f.diff->row}, {"col", f.diff->col}, {"lhs", f.diff->lhs.to_string()},
                 {"rhs", f.diff->rhs.to_string()}};
  }
  if (f.lhs) j["lhs"] = matrix_json(*f.lhs);
  if (f.rhs) j["rhs"] = matrix_json(*f.rhs);
  return j;
}

ordered_json report_json(const SuiteReport& r, bool timing) {
  ordered_json env;
  env["group"] = r.env.group;
  env["group_order"] = r.env.group_order;
  env["subgroup_generators"] = r.env.subgroup_generators;
  env["subgroup_order"] = r.env.subgroup_order;
  env["index"] = r.env.index;
  env["field"] = r.env.field;
  env["seed"] = r.env.seed;
  env["family_size"] = r.env.family_size;
  env["mutation"] = r.env.mutation;
  env["tool_version"] = r.env.version;

  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json j;
    j["id"] = c.id;
    j["status"] = status_name(c.status);
    if (c.failure) {
      ordered_json w = failure_json(*c.failure);
      w["case"] = c.failed_case;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    if (c.status == Status::Skip) j["reason"] = c.skip_reason;
    if (timing) j["ms"] = c.ms;
    j["cases"] = c.cases;
    checks.push_back(std::move(j));
  }

  ordered_json out;
  out["version"] = report_schema_version;
  out["env"] = std::move(env);
  out["checks"] = std::move(checks);
  out["notes"] = r.notes;
  out["passed"] = r.all_passed();
  return out;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "group " << r.env.group << " (order " << r.env.group_order << "), |H| = " << r.env.subgroup_order
     << ", [G:H] = " << r.env.index << ", field " << r.env.field << ", seed " << r.env.seed << ", family "
     << r.env.family_size;
  if (r.env.mutation != "none") os << ", mutation " << r.env.mutation;
  os << "\n";
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    os << "  " << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP") << "  " << c.id
       << "  (" << c.cases << " cases, " << format_ms(c.ms) << " ms)\n";
    if (c.status == Status::Skip) os << "        " << c.skip_reason << "\n";
    if (!c.failure) continue;
    ++failed;
    const auto& f = *c.failure;
    os << "        case " << c.failed_case << ": " << f.message << "\n";
    for (const auto& o : f.objects) os << "        object: " << o << "\n";
  }
  for (const auto& [k, v] : r.notes) os << "  note: " << k << " = " << v << "\n";
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return os.str();
}

ordered_json mutation_json(const std::vector<MutationOutcome>& outcomes, bool timing) {
  ordered_json arr = ordered_json::array();
  for (const auto& o : outcomes) {
    ordered_json j;
    j["mutation"] = mutation_name(o.mutation);
    j["detected"] = o.detected;
    j["replay_reproduced"] = o.replay_reproduced;
    j["first_failure"] = o.first_failure;
    j["report"] = report_json(o.report, timing);
    arr.push_back(std::move(j));
  }
  ordered_json out;
  out["version"] = report_schema_version;
  out["mutation_smoke"] = std::move(arr);
  return out;
}

std::string render_mutation_text(const std::vector<MutationOutcome>& outcomes) {
  std::ostringstream os;
  for (const auto& o : outcomes) {
    os << "mutation " << mutation_name(o.mutation) << ": "
       << (o.detected ? "detected by " + o.first_failure : std::string("NOT detected"));
    if (o.detected) os << (o.replay_reproduced ? ", replay reproduces it" : ", replay does NOT reproduce it");
    os << "\n";
  }
  return os.str();
}

}  // namespace sepmon::verify
