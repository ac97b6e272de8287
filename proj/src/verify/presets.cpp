#include "sepmon/verify/presets.hpp"

#include <fstream>

#include <json.hpp>

#include "sepmon/verify/config.hpp"

namespace sepmon::verify {

const std::vector<GroupPreset>& group_presets() {
  static const std::vector<GroupPreset> presets = {
      {"c2", "cyclic of order 2", {{1, 0}}},
      {"c3", "cyclic of order 3", {{1, 2, 0}}},
      {"c4", "cyclic of order 4", {{1, 2, 3, 0}}},
      {"c6", "cyclic of order 6", {{1, 2, 3, 4, 5, 0}}},
      {"v4", "Klein four-group", {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"s3", "symmetric group on 3 letters", {{1, 0, 2}, {1, 2, 0}}},
      {"d4", "dihedral group of order 8", {{1, 2, 3, 0}, {0, 3, 2, 1}}},
      {"q8", "quaternion group (left regular action)", {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}},
      {"a4", "alternating group on 4 letters", {{1, 2, 0, 3}, {1, 0, 3, 2}}},
      {"s4", "symmetric group on 4 letters", {{1, 2, 3, 0}, {1, 0, 2, 3}}},
  };
  return presets;
}

namespace {

groups::GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("group file '" + path + "': " + e.what());
  }
  try {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("permutations")) {
      auto g = groups::FiniteGroup::from_permutations(j.at("permutations").get<std::vector<groups::Permutation>>());
      if (!labels.empty()) throw ConfigError("group file: labels are only supported with a Cayley table");
      return g;
    }
    if (j.contains("cayley")) {
      return groups::FiniteGroup::from_cayley_table(j.at("cayley").get<std::vector<std::vector<groups::Element>>>(),
                                                    std::move(labels));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("group file '" + path + "': " + e.what());
  } catch (const groups::GroupError& e) {
    throw ConfigError("group file '" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("group file '" + path + "': " + e.what());
  }
  throw ConfigError("group file '" + path + "' needs a \"permutations\" or \"cayley\" entry");
}

}  // namespace

groups::GroupPtr load_group(const std::string& spec) {
  for (const auto& p : group_presets()) {
    if (p.name == spec) return groups::FiniteGroup::from_permutations(p.generators);
  }
  if (spec.find('.') == std::string::npos && spec.find('/') == std::string::npos) {
    std::string names;
    for (const auto& p : group_presets()) names += (names.empty() ? "" : ", ") + p.name;
    throw ConfigError("unknown group preset '" + spec + "' (known: " + names + ")");
  }
  return load_group_file(spec);
}

const std::vector<PresetPair>& default_pairs() {
  static const std::vector<PresetPair> pairs = {
      {"c3", "C3/1", {}},
      {"c4", "C4/C2", {{2, 3, 0, 1}}},
      {"c6", "C6/C2", {{3, 4, 5, 0, 1, 2}}},
      {"v4", "V4/<a>", {{1, 0, 3, 2}}},
      {"q8", "Q8/<i>", {{1, 2, 3, 0, 5, 6, 7, 4}}},
      {"s3", "S3/A3", {{1, 2, 0}}},
      {"s3", "S3/<(1 2)>", {{1, 0, 2}}},
      {"d4", "D4/<s>", {{0, 3, 2, 1}}},
      {"a4", "A4/V4", {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"s4", "S4/<(1 2 3 4)>", {{1, 2, 3, 0}}},
  };
  return pairs;
}

const std::vector<PresetPair>& extra_pairs() {
  static const std::vector<PresetPair> pairs = {
      {"s4", "S4/A4", {{1, 2, 0, 3}, {0, 2, 3, 1}}},
      {"s3", "S3/S3", {{1, 0, 2}, {1, 2, 0}}},
      {"c2", "C2/1", {}},
  };
  return pairs;
}

std::vector<groups::Element> resolve_subgroup(const groups::GroupPtr& g, const PresetPair& pair) {
  std::vector<groups::Element> out;
  for (const auto& p : pair.subgroup_generators) {
    auto e = g->find(p);
    if (!e) throw ConfigError("pair " + pair.label + ": generator is not in " + pair.group);
    out.push_back(*e);
  }
  return out;
}

}  // namespace sepmon::verify
