#include "sepmon/repcat/homspace.hpp"

#include <random>

#include "sepmon/exactlin/linalg.hpp"

namespace sepmon::repcat {

namespace {

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs, std::size_t col, std::size_t rows,
               std::size_t cols, Field f) {
  Matrix out(rows, cols, f);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Scalar& c = coeffs(j, col);
    if (c.is_zero()) continue;
    out = out + (c.is_one() ? basis[j] : basis[j].scaled(c));
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs) {
  Matrix out(basis.front().rows(), basis.front().cols(), basis.front().field());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!coeffs[j].is_zero()) out = out + basis[j].scaled(coeffs[j]);
  }
  return out;
}

}  // namespace

std::vector<Matrix> solve_matrix_constraints(std::size_t rows, std::size_t cols, Field f,
                                             const std::vector<LinearConstraint>& constraints) {
  const std::size_t n = rows * cols;
  // Until the first constraint is applied the basis is the standard one.
  bool standard = true;
  std::vector<Matrix> basis;
  for (const auto& constraint : constraints) {
    std::vector<Matrix> residuals;
    const std::size_t k = standard ? n : basis.size();
    if (k == 0) break;
    residuals.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (standard) {
        Matrix e(rows, cols, f);
        e(j / cols, j % cols) = Scalar::one(f);
        residuals.push_back(constraint(e));
      } else {
        residuals.push_back(constraint(basis[j]));
      }
    }
    const std::size_t rr = residuals.front().rows() * residuals.front().cols();
    Matrix stacked(rr, k, f);
    for (std::size_t j = 0; j < k; ++j) {
      const auto& e = residuals[j].entries();
      for (std::size_t t = 0; t < rr; ++t) {
        if (!e[t].is_zero()) stacked(t, j) = e[t];
      }
    }
    Matrix z = exactlin::nullspace(stacked);
    std::vector<Matrix> next;
    next.reserve(z.cols());
    for (std::size_t c = 0; c < z.cols(); ++c) {
      if (standard) {
        Matrix m(rows, cols, f);
        for (std::size_t j = 0; j < n; ++j) m(j / cols, j % cols) = z(j, c);
        next.push_back(std::move(m));
      } else {
        next.push_back(combine(basis, z, c, rows, cols, f));
      }
    }
    basis = std::move(next);
    standard = false;
  }
  if (standard) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(rows, cols, f);
      e(j / cols, j % cols) = Scalar::one(f);
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

std::vector<Morphism> hom_space_basis(const Rep& x, const Rep& y) {
  require_compatible(x, y, "hom_space_basis");
  std::vector<LinearConstraint> constraints;
  for (std::size_t k = 0; k < x.generator_actions().size(); ++k) {
    const Matrix& a = x.generator_actions()[k];
    const Matrix& b = y.generator_actions()[k];
    constraints.push_back([&a, &b](const Matrix& m) { return m * a - b * m; });
  }
  auto mats = solve_matrix_constraints(y.dim(), x.dim(), x.field(), constraints);
  std::vector<Morphism> out;
  out.reserve(mats.size());
  for (auto& m : mats) out.push_back(Morphism::unchecked(x, y, std::move(m)));
  return out;
}

std::optional<std::vector<Scalar>> express_in_basis(const std::vector<Matrix>& basis, const Matrix& m) {
  const Field f = m.field();
  const std::size_t n = m.rows() * m.cols();
  if (basis.empty()) {
    if (m.is_zero()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  Matrix a(n, basis.size(), f);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t t = 0; t < n; ++t) a(t, j) = basis[j].entries()[t];
  }
  Matrix b(n, 1, f);
  for (std::size_t t = 0; t < n; ++t) b(t, 0) = m.entries()[t];
  auto x = exactlin::solve_linear(a, b);
  if (!x) return std::nullopt;
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < basis.size(); ++j) out.push_back((*x)(j, 0));
  return out;
}

std::optional<InvertiblePair> find_invertible_combination(const std::vector<Matrix>& basis, Field f,
                                                          std::uint64_t seed) {
  if (basis.empty() || !basis.front().is_square()) return std::nullopt;
  auto attempt = [&](const std::vector<Scalar>& coeffs) -> std::optional<InvertiblePair> {
    Matrix m = combine(basis, coeffs);
    if (auto inv = exactlin::mat_inverse(m)) return InvertiblePair{std::move(m), std::move(*inv)};
    return std::nullopt;
  };

  const std::size_t k = basis.size();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < iso_random_attempts; ++t) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (f.is_rational()) {
        coeffs.push_back(Scalar::from_int(f, static_cast<std::int64_t>(rng() % 7) - 3));
      } else {
        coeffs.push_back(Scalar::from_int(f, static_cast<std::int64_t>(rng() % f.characteristic())));
      }
    }
    if (auto r = attempt(coeffs)) return r;
  }

  if (f.is_rational()) return std::nullopt;
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (total > iso_exhaustive_limit / p) return std::nullopt;
    total *= p;
  }
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(k);
    std::uint64_t c = code;
    for (std::size_t j = 0; j < k; ++j) {
      coeffs.push_back(Scalar::from_int(f, static_cast<std::int64_t>(c % p)));
      c /= p;
    }
    if (auto r = attempt(coeffs)) return r;
  }
  return std::nullopt;
}

std::optional<RepIso> find_iso(const Rep& x, const Rep& y) {
  require_compatible(x, y, "find_iso");
  if (x.dim() != y.dim()) return std::nullopt;
  std::vector<Matrix> mats;
  for (const auto& m : hom_space_basis(x, y)) mats.push_back(m.matrix());
  auto pair = find_invertible_combination(mats, x.field());
  if (!pair) return std::nullopt;
  return RepIso{Morphism::unchecked(x, y, std::move(pair->forward)), Morphism::unchecked(y, x, std::move(pair->inverse))};
}

}  // namespace sepmon::repcat
