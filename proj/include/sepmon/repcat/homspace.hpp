#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepmon/repcat/rep.hpp"

namespace sepmon::repcat {

/// A linear map on matrices whose kernel is wanted, e.g. M -> L*M - M*R.
using LinearConstraint = std::function<Matrix(const Matrix&)>;

/// Basis of the rows x cols matrices killed by every constraint.
/// Constraints are imposed one at a time on the running basis, so the most
/// restrictive one should come first. The order of the result is
/// deterministic.
std::vector<Matrix> solve_matrix_constraints(std::size_t rows, std::size_t cols, Field f,
                                             const std::vector<LinearConstraint>& constraints);

/// Basis of the equivariant maps x -> y.
std::vector<Morphism> hom_space_basis(const Rep& x, const Rep& y);

/// Coefficients of m in the given basis, or nullopt if m is not in the span.
std::optional<std::vector<Scalar>> express_in_basis(const std::vector<Matrix>& basis, const Matrix& m);

struct InvertiblePair {
  Matrix forward;
  Matrix inverse;
};

inline constexpr int iso_random_attempts = 32;
inline constexpr std::uint64_t iso_exhaustive_limit = 16384;

/// An invertible linear combination of basis, found by seeded random
/// combinations and, over a small prime field, exhaustive search.
/// nullopt means "not found", not "does not exist".
std::optional<InvertiblePair> find_invertible_combination(const std::vector<Matrix>& basis, Field f,
                                                          std::uint64_t seed = 0x5eed);

struct RepIso {
  Morphism forward;
  Morphism inverse;
};

/// An equivariant isomorphism x -> y with its inverse. Different dimensions
/// give nullopt immediately.
std::optional<RepIso> find_iso(const Rep& x, const Rep& y);

}  // namespace sepmon::repcat
