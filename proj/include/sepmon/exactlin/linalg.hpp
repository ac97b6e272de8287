#pragma once

#include <optional>
#include <vector>

#include "sepmon/exactlin/matrix.hpp"

namespace sepmon::exactlin {

/// Result of rank_and_column_basis().
struct ColumnBasis {
  std::size_t rank = 0;
  /// rows x rank: the pivot columns of the input.
  Matrix basis;
  /// rank x rows with projector_witness * basis = I_rank.
  Matrix projector_witness;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Over Q the elimination is fraction-free
/// (integer row operations with content removal) and the pivot rows are
/// only normalized at the end; over F_p pivots are scaled to 1 as usual.
/// Pivots are restricted to columns < pivot_limit (default: all).
Echelon row_reduce(const Matrix& a, std::size_t pivot_limit = static_cast<std::size_t>(-1));

std::size_t rank(const Matrix& a);

ColumnBasis rank_and_column_basis(const Matrix& a);

/// Basis of {v : a v = 0} as the columns of a cols x k matrix, one column
/// per non-pivot column of the echelon form (in increasing order).
Matrix nullspace(const Matrix& a);

/// Some X with a*X = b, or nullopt if inconsistent. Free variables are set
/// to zero, so the answer is the unique solution supported on the pivot
/// columns of a.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> mat_inverse(const Matrix& a);

}  // namespace sepmon::exactlin
