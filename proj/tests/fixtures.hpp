#pragma once

#include "sepmon/groups/cosets.hpp"

namespace fixtures {

using namespace sepmon::groups;

inline GroupPtr s3() {
  static const GroupPtr g = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  return g;
}

inline GroupPtr c4() {
  static const GroupPtr g = FiniteGroup::from_permutations({{1, 2, 3, 0}});
  return g;
}

/// Right cosets of the subgroup generated by the given permutations.
inline CosetSpace cosets(const GroupPtr& g, const std::vector<Permutation>& gens) {
  std::vector<Element> idx;
  for (const auto& p : gens) idx.push_back(*g->find(p));
  return CosetSpace::right_cosets(g, subgroup_generated(g, idx));
}

/// S3 / <(1 2)>, index 3.
inline const CosetSpace& s3_transposition() {
  static const CosetSpace cs = cosets(s3(), {{1, 0, 2}});
  return cs;
}

/// S3 / A3, index 2.
inline const CosetSpace& s3_alternating() {
  static const CosetSpace cs = cosets(s3(), {{1, 2, 0}});
  return cs;
}

/// S3 / S3.
inline const CosetSpace& s3_whole() {
  static const CosetSpace cs = cosets(s3(), {{1, 0, 2}, {1, 2, 0}});
  return cs;
}

/// C4 / C2, index 2.
inline const CosetSpace& c4_half() {
  static const CosetSpace cs = cosets(c4(), {{2, 3, 0, 1}});
  return cs;
}

}  // namespace fixtures
