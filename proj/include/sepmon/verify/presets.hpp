#pragma once

#include <string>
#include <vector>

#include "sepmon/groups/cosets.hpp"

namespace sepmon::verify {

struct GroupPreset {
  std::string name;
  std::string description;
  std::vector<groups::Permutation> generators;
};

const std::vector<GroupPreset>& group_presets();

/// A preset name or a path to a JSON group file
/// ({"permutations": [...]} or {"cayley": [...]}, optional "labels").
groups::GroupPtr load_group(const std::string& spec);

/// A (G, H) pair given by permutations, resolved against the preset group.
struct PresetPair {
  std::string group;
  std::string label;
  std::vector<groups::Permutation> subgroup_generators;
};

/// The ten pairs of the default run matrix.
const std::vector<PresetPair>& default_pairs();

/// Extra pairs exercised by the structure-constant and separability runs.
const std::vector<PresetPair>& extra_pairs();

/// Element indices of the subgroup generators of a pair.
std::vector<groups::Element> resolve_subgroup(const groups::GroupPtr& g, const PresetPair& pair);

}  // namespace sepmon::verify
