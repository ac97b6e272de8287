#pragma once

#include <cstdint>

#include "sepmon/repcat/rep.hpp"

namespace sepmon::repcat {

struct RepBudget {
  std::size_t max_summands = 2;
  std::size_t max_dim = 12;
  /// Further summands are added past max_summands until this is reached.
  std::size_t min_dim = 1;
};

/// A direct sum of permutation representations k[G/K] for random subgroups
/// K, conjugated by a random unimodular integer matrix so that the basis is
/// not a permutation basis. Deterministic in the seed. The dimension is at
/// least min(min_dim, max_dim) and at most max_dim.
Rep random_rep(const GroupPtr& g, Field f, std::uint64_t seed, RepBudget budget = {});

/// A random linear combination of the hom space basis (zero if the space is
/// zero). Deterministic in the seed.
Morphism random_morphism(const Rep& x, const Rep& y, std::uint64_t seed);

/// Uniform draw in [0, n) by reduction; stable across standard libraries.
inline std::uint64_t draw(std::uint64_t word, std::uint64_t n) { return n == 0 ? 0 : word % n; }

}  // namespace sepmon::repcat
