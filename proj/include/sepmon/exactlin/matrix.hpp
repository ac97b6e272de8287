#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sepmon/exactlin/scalar.hpp"

namespace sepmon::exactlin {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  /// n x 1 column.
  static Matrix column(Field f, const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column_at(std::size_t j) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::size_t hash() const;
  /// Rows of entry strings, for reports.
  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Exact product a*b. Zero entries of a are skipped, so block-sparse
/// operands multiply in time proportional to their fill.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Kronecker product: entry (i*b.rows + k, j*b.cols + l) = a(i,j) * b(k,l).
Matrix mat_kron(const Matrix& a, const Matrix& b);

/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Permutation matrix P with P(perm[j], j) = 1.
Matrix permutation_matrix(const std::vector<std::size_t>& perm, Field f);

/// First entry where a and b differ, for failure witnesses.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar lhs;
  Scalar rhs;
};
std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b);

}  // namespace sepmon::exactlin
