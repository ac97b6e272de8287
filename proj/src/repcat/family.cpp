#include "sepmon/repcat/family.hpp"

#include <random>

#include "sepmon/groups/cosets.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/tensor.hpp"

namespace sepmon::repcat {

Rep random_rep(const GroupPtr& g, Field f, std::uint64_t seed, RepBudget budget) {
  std::mt19937_64 rng(seed);
  const std::size_t max_dim = std::max<std::size_t>(budget.max_dim, 1);
  const std::size_t summands = 1 + draw(rng(), std::max<std::size_t>(budget.max_summands, 1));

  std::vector<Rep> parts;
  const std::size_t min_dim = std::min(budget.min_dim, max_dim);
  std::size_t dim = 0;
  for (std::size_t s = 0; s < summands || dim < min_dim; ++s) {
    std::vector<Element> gens;
    const std::size_t ngens = draw(rng(), 3);
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(static_cast<Element>(draw(rng(), g->order())));
    auto k = groups::subgroup_generated(g, gens);
    std::size_t d = g->order() / k.order();
    if (dim + d > max_dim) {
      if (dim + 1 > max_dim) break;
      k = groups::subgroup_generated(g, g->generators());
      d = 1;
    }
    parts.push_back(coset_permutation_rep(g, k, f));
    dim += d;
  }

  std::vector<Matrix> actions;
  actions.reserve(g->order());
  for (Element e = 0; e < g->order(); ++e) {
    Matrix m = parts.front().action(e);
    for (std::size_t i = 1; i < parts.size(); ++i) m = exactlin::direct_sum(m, parts[i].action(e));
    actions.push_back(std::move(m));
  }

  if (dim > 1) {
    // P is a product of elementary operations row_i += c row_j with c = +-1,
    // so both P and its inverse stay integral.
    Matrix p = Matrix::identity(dim, f);
    Matrix p_inv = Matrix::identity(dim, f);
    const std::size_t ops = 2 * dim;
    for (std::size_t t = 0; t < ops; ++t) {
      std::size_t i = draw(rng(), dim);
      std::size_t j = draw(rng(), dim - 1);
      if (j >= i) ++j;
      Scalar c = Scalar::from_int(f, draw(rng(), 2) == 0 ? 1 : -1);
      for (std::size_t col = 0; col < dim; ++col) {
        if (!p(j, col).is_zero()) p(i, col) += c * p(j, col);
      }
      for (std::size_t row = 0; row < dim; ++row) {
        if (!p_inv(row, i).is_zero()) p_inv(row, j) -= c * p_inv(row, i);
      }
    }
    for (auto& m : actions) m = p * m * p_inv;
  }
  return Rep::from_matrices(g, f, dim, std::move(actions), "rand#" + std::to_string(seed));
}

Morphism random_morphism(const Rep& x, const Rep& y, std::uint64_t seed) {
  auto basis = hom_space_basis(x, y);
  std::mt19937_64 rng(seed);
  Morphism out = Morphism::zero(x, y);
  const Field f = x.field();
  for (const auto& b : basis) {
    std::int64_t c = f.is_rational() ? static_cast<std::int64_t>(draw(rng(), 5)) - 2
                                     : static_cast<std::int64_t>(draw(rng(), f.characteristic()));
    if (c != 0) out = out + b.scaled(Scalar::from_int(f, c));
  }
  return out;
}

}  // namespace sepmon::repcat
