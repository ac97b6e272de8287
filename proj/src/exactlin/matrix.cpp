#include "sepmon/exactlin/matrix.hpp"

#include <sstream>

namespace sepmon::exactlin {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(nr, nc, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw DimensionMismatch("from_ints: ragged rows");
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(nr, nc, f);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      require_same_field(f, rows[i][j].field(), "from_rows");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::column(Field f, const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), 1, f);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_field(f, entries[i].field(), "column");
    m(i, 0) = entries[i];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += !s.is_zero();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

Matrix Matrix::column_at(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) m(i, k) = (*this)(i, cols[k]);
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& b) const {
  require_same_field(field_, b.field_, "matrix +");
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix +: shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!b.data_[i].is_zero()) c.data_[i] += b.data_[i];
  }
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const { return *this + b.scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& s) const {
  require_same_field(field_, s.field(), "matrix scale");
  Matrix c = *this;
  for (auto& e : c.data_) {
    if (!e.is_zero()) e *= s;
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 1315423911u ^ cols_;
  for (const auto& s : data_) h = h * 1099511628211ull ^ s.hash();
  return h;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  // Nonzero column lists of b, one per row.
  std::vector<std::vector<std::size_t>> nz(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) nz[k].push_back(j);
    }
  }
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      if (aik.is_one()) {
        for (auto j : nz[k]) c(i, j) += b(k, j);
      } else {
        for (auto j : nz[k]) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix mat_kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "mat_kron");
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "direct_sum");
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "hstack");
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  Matrix c(a.rows(), a.cols() + b.cols(), a.field());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "vstack");
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix c(a.rows() + b.rows(), a.cols(), a.field());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm, Field f) {
  Matrix p(perm.size(), perm.size(), f);
  for (std::size_t j = 0; j < perm.size(); ++j) p(perm[j], j) = Scalar::one(f);
  return p;
}

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("first_difference: shape mismatch");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return EntryDiff{i, j, a(i, j), b(i, j)};
    }
  }
  return std::nullopt;
}

}  // namespace sepmon::exactlin
