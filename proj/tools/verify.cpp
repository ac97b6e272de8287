#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "sepmon/verify/presets.hpp"
#include "sepmon/verify/report.hpp"

using namespace sepmon;
using namespace sepmon::verify;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_config = 2;
constexpr int exit_internal = 3;

std::size_t worker_count() {
  const char* env = std::getenv("SEPMON_WORKERS");
  if (env == nullptr) return 1;
  try {
    long v = std::stol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string("SEPMON_WORKERS must be a positive integer, got '") + env + "'");
}

std::string join(const std::vector<groups::Element>& v) {
  std::string out;
  for (auto e : v) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

struct MatrixCase {
  std::string label;
  SuiteConfig cfg;
};

std::vector<MatrixCase> matrix_cases(const SuiteConfig& base) {
  std::vector<MatrixCase> out;
  for (const auto& pair : default_pairs()) {
    auto g = load_group(pair.group);
    for (const char* field : {"q", "fp:2", "fp:3", "fp:5"}) {
      SuiteConfig cfg = base;
      cfg.group = pair.group;
      cfg.subgroup = join(resolve_subgroup(g, pair));
      cfg.field = exactlin::Field::parse(field);
      out.push_back({pair.label + " over " + cfg.field.name(), cfg});
    }
  }
  return out;
}

/// One worker per case; results are emitted in matrix order.
int run_matrix(const SuiteConfig& base, bool timing) {
  auto cases = matrix_cases(base);
  std::vector<std::optional<SuiteReport>> reports(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        reports[i] = run_suite(cases[i].cfg);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
      std::lock_guard lock(log_mutex);
      std::cerr << "[" << (i + 1) << "/" << cases.size() << "] " << cases[i].label << ": "
                << (reports[i] ? (reports[i]->all_passed() ? "pass" : "FAIL") : "ERROR " + errors[i]) << "\n";
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t workers = std::min(worker_count(), cases.size());
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();

  bool ok = true;
  bool internal = false;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!reports[i]) {
      internal = true;
      arr.push_back({{"case", cases[i].label}, {"error", errors[i]}});
      continue;
    }
    ok = ok && reports[i]->all_passed();
    if (base.format == ReportFormat::Json) {
      arr.push_back({{"case", cases[i].label}, {"report", report_json(*reports[i], timing)}});
    } else {
      std::cout << "== " << cases[i].label << "\n" << render_text(*reports[i]);
    }
  }
  if (base.format == ReportFormat::Json) {
    nlohmann::ordered_json out;
    out["version"] = report_schema_version;
    out["matrix"] = std::move(arr);
    std::cout << out.dump(2) << "\n";
  }
  if (internal) return exit_internal;
  return ok ? exit_pass : exit_fail;
}

int run_replay(const SuiteConfig& cfg, const std::string& target) {
  auto colon = target.rfind(':');
  if (colon == std::string::npos) throw ConfigError("--replay expects <check-id>:<case>");
  std::size_t index = 0;
  try {
    index = std::stoul(target.substr(colon + 1));
  } catch (const std::exception&) {
    throw ConfigError("--replay expects <check-id>:<case>");
  }
  auto f = replay(cfg, target.substr(0, colon), index);
  if (cfg.format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["check"] = target.substr(0, colon);
    j["case"] = index;
    j["status"] = f ? "fail" : "pass";
    j["witness"] = f ? failure_json(*f) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << target << ": " << (f ? "FAIL: " + f->message : std::string("pass")) << "\n";
  }
  return f ? exit_fail : exit_pass;
}

int list_elements(const SuiteConfig& cfg) {
  auto g = load_group(cfg.group);
  for (groups::Element e = 0; e < g->order(); ++e) {
    std::cout << e << "\t" << g->label(e) << "\t(inverse " << g->inv(e) << ")\n";
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Res/Coind adjunction, the separable ring k(H\\G) and its module category"};
  SuiteConfig cfg;
  std::string field = "q";
  std::string checks = "all";
  std::string report = "json";
  std::string replay_target;
  std::string output;
  bool smoke = false;
  bool matrix = false;
  bool no_timing = false;
  bool elements = false;
  bool presets = false;

  app.add_option("--group", cfg.group, "preset name or JSON group file")->capture_default_str();
  app.add_option("--subgroup", cfg.subgroup, "comma-separated generator indices, empty for 1, 'all' for G");
  app.add_option("--field", field, "q or fp:P")->capture_default_str();
  app.add_option("--seed", cfg.seed, "family seed")->capture_default_str();
  app.add_option("--family-size", cfg.family_size, "objects per family")->capture_default_str();
  app.add_option("--checks", checks, "comma-separated check ids or 'all'")->capture_default_str();
  app.add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", output, "write the report to a file instead of stdout");
  app.add_flag("--mutation-smoke", smoke, "run the suite under each deliberate corruption");
  app.add_flag("--matrix", matrix, "run the default (G, H) pairs over q, fp:2, fp:3 and fp:5 (workers: SEPMON_WORKERS)");
  app.add_option("--replay", replay_target, "re-run one instance, given as <check-id>:<case>");
  app.add_flag("--no-timing", no_timing, "omit timing fields from JSON output");
  app.add_flag("--list-elements", elements, "print the element indices of the group and exit");
  app.add_flag("--list-presets", presets, "print the group presets and exit");
  app.add_flag("--list-checks", [](std::int64_t) {
    for (const auto& c : check_registry()) std::cout << c.id << "\t" << c.description << "\n";
    std::exit(exit_pass);
  }, "print the check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_config;
  }

  std::streambuf* saved = nullptr;
  std::ofstream file;
  try {
    if (presets) {
      for (const auto& p : group_presets()) std::cout << p.name << "\t" << p.description << "\n";
      return exit_pass;
    }
    cfg.field = exactlin::Field::parse(field);
    cfg.checks = parse_check_list(checks);
    cfg.format = report == "text" ? ReportFormat::Text : ReportFormat::Json;
    validate(cfg);
    if (!output.empty()) {
      file.open(output);
      if (!file) throw ConfigError("cannot write '" + output + "'");
      saved = std::cout.rdbuf(file.rdbuf());
    }
    int code = exit_pass;
    if (elements) {
      code = list_elements(cfg);
    } else if (matrix) {
      code = run_matrix(cfg, !no_timing);
    } else if (!replay_target.empty()) {
      code = run_replay(cfg, replay_target);
    } else if (smoke) {
      auto outcomes = mutation_smoke(cfg);
      if (cfg.format == ReportFormat::Json) {
        std::cout << mutation_json(outcomes, !no_timing).dump(2) << "\n";
      } else {
        std::cout << render_mutation_text(outcomes);
      }
      for (const auto& o : outcomes) {
        if (!o.detected || !o.replay_reproduced) code = exit_fail;
      }
    } else {
      auto r = run_suite(cfg);
      if (cfg.format == ReportFormat::Json) {
        std::cout << report_json(r, !no_timing).dump(2) << "\n";
      } else {
        std::cout << render_text(r);
      }
      code = r.all_passed() ? exit_pass : exit_fail;
    }
    if (saved) std::cout.rdbuf(saved);
    return code;
  } catch (const ConfigError& e) {
    if (saved) std::cout.rdbuf(saved);
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::invalid_argument& e) {
    if (saved) std::cout.rdbuf(saved);
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception& e) {
    if (saved) std::cout.rdbuf(saved);
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
