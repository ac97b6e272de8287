#pragma once

#include <optional>
#include <string>

#include "sepmon/repcat/rep.hpp"

namespace sepmon::repcat {

/// A failed equation between two matrices, with both sides kept for
/// witnesses.
struct LawFailure {
  std::string law;
  Matrix lhs;
  Matrix rhs;
  /// Unset when the shapes differ.
  std::optional<exactlin::EntryDiff> diff;
  std::string describe() const;
};

std::optional<LawFailure> expect_equal(std::string law, const Matrix& lhs, const Matrix& rhs);

/// Also requires matching endpoints.
std::optional<LawFailure> expect_equal(std::string law, const Morphism& lhs, const Morphism& rhs);

std::optional<LawFailure> expect_identity(std::string law, const Morphism& f);

/// Equivariance on generators; the witness sides are f*x(s) and y(s)*f.
std::optional<LawFailure> expect_equivariant(std::string law, const Morphism& f);

}  // namespace sepmon::repcat
