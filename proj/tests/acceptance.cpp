// Acceptance driver: runs the default matrix once and judges each criterion
// from the per-check records. Prints one line per criterion and exits
// non-zero if any of them fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sepmon/verify/presets.hpp"
#include "sepmon/verify/report.hpp"

using namespace sepmon;
using namespace sepmon::verify;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> fields = {"q", "fp:2", "fp:3", "fp:5"};

struct Run {
  std::string pair;
  std::string field;
  SuiteReport report;
};

struct Verdict {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
};

std::string join(const std::vector<groups::Element>& v) {
  std::string out;
  for (auto e : v) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

SuiteConfig config_for(const PresetPair& pair, const std::string& field) {
  SuiteConfig cfg;
  cfg.group = pair.group;
  cfg.subgroup = join(resolve_subgroup(load_group(pair.group), pair));
  cfg.field = exactlin::Field::parse(field);
  return cfg;
}

const CheckRecord* find(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string where(const Run& run) { return run.pair + " over " + run.field; }

/// Requires each listed check to pass with at least min_cases instances and
/// returns their combined time.
double require_checks(Verdict& v, const Run& run, const std::vector<std::string>& ids, std::size_t min_cases) {
  double ms = 0;
  for (const auto& id : ids) {
    const CheckRecord* rec = find(run.report, id);
    if (rec == nullptr) {
      v.require(false, id + " missing on " + where(run));
      continue;
    }
    ms += rec->ms;
    v.require(rec->status == Status::Pass,
              id + " " + status_name(rec->status) + " on " + where(run) +
                  (rec->failure ? ": " + rec->failure->message : rec->skip_reason.empty() ? "" : ": " + rec->skip_reason));
    v.require(rec->cases >= min_cases, id + " ran " + std::to_string(rec->cases) + " instances on " + where(run));
  }
  return ms;
}

void print(int n, const std::string& name, const Verdict& v, double seconds) {
  std::printf("criterion %d %-28s %s  (%.2fs) %s\n", n, name.c_str(), v.ok ? "PASS" : "FAIL", seconds,
              v.detail.c_str());
  for (std::size_t i = 0; i < std::min<std::size_t>(v.problems.size(), 5); ++i) {
    std::printf("    %s\n", v.problems[i].c_str());
  }
  if (v.problems.size() > 5) std::printf("    ... %zu more\n", v.problems.size() - 5);
}

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << ms << "ms";
  return s.str();
}

}  // namespace

int main() {
  const auto total_start = Clock::now();
  std::vector<Run> matrix;
  for (const auto& pair : default_pairs()) {
    for (const auto& f : fields) matrix.push_back({pair.label, f, run_suite(config_for(pair, f))});
  }
  const double matrix_s = std::chrono::duration<double>(Clock::now() - total_start).count();
  std::vector<Run> extra;
  for (const auto& pair : extra_pairs()) {
    for (const auto& f : fields) {
      auto cfg = config_for(pair, f);
      cfg.checks = {"ring.standard.structure_constants", "ring.standard.axioms", "ring.standard.separable"};
      extra.push_back({pair.label, f, run_suite(cfg)});
    }
  }
  bool all_ok = true;
  auto finish = [&](int n, const std::string& name, const Verdict& v, double seconds) {
    print(n, name, v, seconds);
    all_ok = all_ok && v.ok;
  };

  {
    Verdict v;
    const std::map<std::string, std::size_t> expected = {{"S3/A3", 2}, {"S3/<(1 2)>", 3}, {"S4/A4", 2}, {"A4/V4", 3}};
    double worst = 0;
    std::size_t pairs = 0;
    for (const auto* runs : {&matrix, &extra}) {
      for (const auto& run : *runs) {
        if (run.field != "q") continue;
        ++pairs;
        require_checks(v, run, {"ring.standard.structure_constants"}, 1);
        const auto& env = run.report.env;
        v.require(env.index * env.subgroup_order == env.group_order, "index mismatch on " + run.pair);
        if (auto it = expected.find(run.pair); it != expected.end()) {
          v.require(env.index == it->second, "dim A on " + run.pair + " is " + std::to_string(env.index));
        }
      }
    }
    // Timed from scratch so that group loading and ring construction count.
    for (const auto* pairs_list : {&default_pairs(), &extra_pairs()}) {
      for (const auto& pair : *pairs_list) {
        auto cfg = config_for(pair, "q");
        cfg.checks = {"ring.standard.structure_constants"};
        const auto start = Clock::now();
        v.require(run_suite(cfg).all_passed(), "structure constants fail on " + pair.label);
        worst = std::max(worst, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
      }
    }
    for (const auto& [label, dim] : expected) {
      const bool seen = std::any_of(matrix.begin(), matrix.end(), [&](const Run& r) { return r.pair == label; }) ||
                        std::any_of(extra.begin(), extra.end(), [&](const Run& r) { return r.pair == label; });
      v.require(seen, "pair " + label + " not exercised");
    }
    v.require(worst < 1000, "slowest pair took " + fmt_ms(worst));
    v.detail = std::to_string(pairs) + " pairs, slowest " + fmt_ms(worst);
    finish(1, "structure constants", v, worst / 1000);
  }

  {
    Verdict v;
    double worst = 0;
    std::size_t cases = 0;
    for (const auto* runs : {&matrix, &extra}) {
      for (const auto& run : *runs) {
        ++cases;
        worst = std::max(worst, require_checks(v, run, {"ring.standard.separable"}, 1));
      }
    }
    v.require(worst < 1000, "slowest case took " + fmt_ms(worst));
    v.detail = std::to_string(cases) + " (pair, field) cases, slowest " + fmt_ms(worst);
    finish(2, "separability", v, worst / 1000);
  }

  // Per-pair thresholds apply to each field separately.
  auto per_pair = [&](int n, const std::string& name, const std::vector<std::string>& ids, std::size_t min_cases,
                      double limit_ms, const std::function<void(Verdict&)>& extra_detail) {
    Verdict v;
    double worst = 0;
    for (const auto& run : matrix) worst = std::max(worst, require_checks(v, run, ids, min_cases));
    v.require(worst < limit_ms, "slowest pair took " + fmt_ms(worst));
    v.detail = "slowest " + fmt_ms(worst);
    if (extra_detail) extra_detail(v);
    finish(n, name, v, worst / 1000);
  };

  per_pair(3, "adjunction hypothesis", {"adjunction.triangle", "adjunction.counit_section", "adjunction.xi_natural"}, 10,
           5000, nullptr);

  per_pair(4, "projection formula", {"projection.invertible", "projection.composite"}, 10, 10000, [](Verdict& v) {
    std::size_t max_y = 0;
    std::size_t max_x = 0;
    for (const auto& pair : default_pairs()) {
      const Case c(config_for(pair, "q"));
      for (const auto& [y, x] : c.pi_pairs()) {
        max_y = std::max(max_y, y.dim());
        max_x = std::max(max_x, x.dim());
      }
    }
    v.require(max_y == 12 && max_x == 12, "family never reaches 12 x 12");
    v.detail += ", max dims y " + std::to_string(max_y) + " x " + std::to_string(max_x);
  });

  per_pair(5, "monad morphism diagrams", {"monad_morphism.unit_triangle", "monad_morphism.mult_square"}, 10,
           1e18, nullptr);

  {
    Verdict v;
    double worst = 0;
    std::size_t summands = 0;
    for (const auto& run : matrix) {
      double ms = require_checks(v, run, {"em.idempotent", "em.unit_roundtrip", "em.counit_roundtrip"}, 10);
      ms += require_checks(v, run, {"em.comparison", "em.extension_of_scalars"}, 5);
      worst = std::max(worst, ms);
      if (auto it = run.report.notes.find("modules.summand"); it != run.report.notes.end()) summands += it->second;
    }
    v.require(summands > 0, "no non-free summand found in any run");
    v.require(worst < 60000, "slowest pair took " + fmt_ms(worst));
    v.require(matrix_s < 900, "full matrix took " + std::to_string(matrix_s) + "s");
    std::ostringstream d;
    d.precision(1);
    d << std::fixed << "slowest " << fmt_ms(worst) << ", " << summands << " summand modules, full matrix "
      << matrix_s << "s";
    v.detail = d.str();
    finish(6, "Eilenberg-Moore equivalence", v, matrix_s);
  }

  {
    Verdict v;
    const auto start = Clock::now();
    std::size_t runs = 0;
    for (const auto& [label, field] : std::vector<std::pair<std::string, std::string>>{
             {"S3/<(1 2)>", "fp:3"}, {"C4/C2", "fp:2"}, {"A4/V4", "q"}}) {
      auto pair = std::find_if(default_pairs().begin(), default_pairs().end(),
                               [&](const PresetPair& p) { return p.label == label; });
      for (const auto& o : mutation_smoke(config_for(*pair, field))) {
        ++runs;
        v.require(o.detected, mutation_name(o.mutation) + " undetected on " + label);
        v.require(o.replay_reproduced, mutation_name(o.mutation) + " replay differs on " + label);
      }
    }
    v.detail = std::to_string(runs) + " corrupted runs";
    finish(7, "negative controls", v, std::chrono::duration<double>(Clock::now() - start).count());
  }

  {
    Verdict v;
    const auto start = Clock::now();
    for (const auto& pair : default_pairs()) {
      auto cfg = config_for(pair, "fp:3");
      cfg.seed = 20240611;
      const auto a = report_json(run_suite(cfg), false).dump();
      const auto b = report_json(run_suite(cfg), false).dump();
      v.require(a == b, "reports differ on " + pair.label);
      const auto& first = matrix.front();
      if (pair.label == first.pair) {
        auto again = config_for(pair, first.field);
        v.require(report_json(run_suite(again), false).dump() == report_json(first.report, false).dump(),
                  "matrix report differs on rerun of " + where(first));
      }
    }
    v.detail = "10 pairs run twice";
    finish(8, "determinism", v, std::chrono::duration<double>(Clock::now() - start).count());
  }

  std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}
