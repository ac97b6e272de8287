#include "sepmon/exactlin/linalg.hpp"

#include <algorithm>

namespace sepmon::exactlin {

namespace {

using Row = std::vector<Scalar>;

std::size_t count_nonzero(const Row& row) {
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

Scalar denominator_of(const Scalar& s) {
  return Scalar::from_mpq(mpq_class(s.to_mpq().get_den()));
}

// Scales a rational row to coprime integers.
void make_primitive_integral(Row& row) {
  Scalar lcm = Scalar::one(Field::rationals());
  for (const auto& s : row) {
    if (s.is_zero() || s.is_integer()) continue;
    Scalar d = denominator_of(s);
    lcm = Scalar::exact_div(lcm * d, Scalar::gcd(lcm, d));
  }
  if (!lcm.is_one()) {
    for (auto& s : row) {
      if (!s.is_zero()) s *= lcm;
    }
  }
  Scalar content = Scalar::zero(Field::rationals());
  for (const auto& s : row) {
    if (s.is_zero()) continue;
    content = Scalar::gcd(content, s);
    if (content.is_one()) return;
  }
  if (content.is_zero() || content.is_one()) return;
  for (auto& s : row) {
    if (!s.is_zero()) s = Scalar::exact_div(s, content);
  }
}

}  // namespace

Echelon row_reduce(const Matrix& a, std::size_t pivot_limit) {
  const Field f = a.field();
  const bool rational = f.is_rational();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t limit = std::min(pivot_limit, n);

  std::vector<Row> rows(m);
  std::vector<std::size_t> nnz(m);
  for (std::size_t i = 0; i < m; ++i) {
    rows[i].assign(a.entries().begin() + static_cast<std::ptrdiff_t>(i * n),
                   a.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    if (rational) make_primitive_integral(rows[i]);
    nnz[i] = count_nonzero(rows[i]);
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < limit && r < m; ++c) {
    // Sparse, small pivots first; ties broken by row order.
    std::size_t best = m;
    std::pair<std::size_t, std::size_t> best_key{};
    for (std::size_t i = r; i < m; ++i) {
      if (rows[i][c].is_zero()) continue;
      std::pair<std::size_t, std::size_t> key{rows[i][c].size_class(), nnz[i]};
      if (best == m || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (best == m) continue;
    std::swap(rows[r], rows[best]);
    std::swap(nnz[r], nnz[best]);

    Row& prow = rows[r];
    if (!rational && !prow[c].is_one()) {
      Scalar inv = prow[c].inverse();
      for (std::size_t j = c; j < n; ++j) {
        if (!prow[j].is_zero()) prow[j] *= inv;
      }
    }
    support.clear();
    for (std::size_t j = c; j < n; ++j) {
      if (!prow[j].is_zero()) support.push_back(j);
    }

    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Row& row = rows[i];
      if (!rational) {
        Scalar factor = row[c];
        for (auto j : support) row[j] -= factor * prow[j];
      } else {
        // row <- (p/g) row - (q/g) prow, keeping integers.
        const Scalar& p = prow[c];
        Scalar g = Scalar::gcd(p, row[c]);
        if (p.sign() < 0) g = -g;
        Scalar alpha = Scalar::exact_div(p, g);
        Scalar beta = Scalar::exact_div(row[c], g);
        bool scaled = !alpha.is_one();
        if (scaled) {
          for (auto& s : row) {
            if (!s.is_zero()) s *= alpha;
          }
        }
        for (auto j : support) row[j] -= beta * prow[j];
        if (scaled) make_primitive_integral(row);
      }
      nnz[i] = count_nonzero(row);
    }
    pivots.push_back(c);
    ++r;
  }

  if (rational) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Row& row = rows[k];
      const Scalar p = row[pivots[k]];
      if (p.is_one()) continue;
      Scalar inv = p.inverse();
      for (auto& s : row) {
        if (!s.is_zero()) s *= inv;
      }
    }
  }

  Matrix reduced(m, n, f);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = std::move(rows[i][j]);
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
  Echelon e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Matrix basis(n, free_cols.size(), a.field());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = Scalar::one(a.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& v = e.reduced(i, fc);
      if (!v.is_zero()) basis(e.pivots[i], k) = -v;
    }
  }
  return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "solve_linear");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: a.rows != b.rows");
  Echelon e = row_reduce(hstack(a, b), a.cols());
  const std::size_t rk = e.pivots.size();
  for (std::size_t i = rk; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!e.reduced(i, a.cols() + j).is_zero()) return std::nullopt;
    }
  }
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t k = 0; k < rk; ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, a.cols() + j);
  }
  return x;
}

ColumnBasis rank_and_column_basis(const Matrix& a) {
  Echelon e = row_reduce(a);
  ColumnBasis out;
  out.rank = e.pivots.size();
  out.pivot_columns = e.pivots;
  out.basis = a.select_columns(e.pivots);
  if (out.rank == 0) {
    out.projector_witness = Matrix(0, a.rows(), a.field());
    return out;
  }
  auto x = solve_linear(out.basis.transpose(), Matrix::identity(out.rank, a.field()));
  // basis has full column rank, so its transpose has full row rank.
  out.projector_witness = x->transpose();
  return out;
}

std::optional<Matrix> mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inverse: non-square input");
  return solve_linear(a, Matrix::identity(a.rows(), a.field()));
}

}  // namespace sepmon::exactlin
