#include "sepmon/repcat/tensor.hpp"

namespace sepmon::repcat {

namespace {

class UnitImpl final : public RepImpl {
 public:
  UnitImpl(GroupPtr g, Field f) : RepImpl(std::move(g), f, 1) {}
  Matrix action(Element) const override { return Matrix::identity(1, field()); }
  std::string describe() const override { return "1"; }
};

class TensorImpl final : public RepImpl {
 public:
  TensorImpl(Rep x, Rep y) : RepImpl(x.group(), x.field(), x.dim() * y.dim()), x_(std::move(x)), y_(std::move(y)) {}
  Matrix action(Element g) const override { return exactlin::mat_kron(x_.action(g), y_.action(g)); }
  std::string describe() const override { return "(" + x_.describe() + " ⊗ " + y_.describe() + ")"; }

 private:
  Rep x_, y_;
};

class RestrictedImpl final : public RepImpl {
 public:
  RestrictedImpl(Rep x, groups::Subgroup h)
      : RepImpl(h.as_group(), x.field(), x.dim()), x_(std::move(x)), h_(std::move(h)) {}
  Matrix action(Element g) const override { return x_.action(h_.to_parent(g)); }
  std::string describe() const override { return "Res(" + x_.describe() + ")"; }

 private:
  Rep x_;
  groups::Subgroup h_;
};

class SumImpl final : public RepImpl {
 public:
  SumImpl(Rep x, Rep y) : RepImpl(x.group(), x.field(), x.dim() + y.dim()), x_(std::move(x)), y_(std::move(y)) {}
  Matrix action(Element g) const override { return exactlin::direct_sum(x_.action(g), y_.action(g)); }
  std::string describe() const override { return "(" + x_.describe() + " ⊕ " + y_.describe() + ")"; }

 private:
  Rep x_, y_;
};

}  // namespace

Rep unit_rep(const GroupPtr& g, Field f) { return Rep::from_impl(std::make_shared<UnitImpl>(g, f)); }

Rep tensor_obj(const Rep& x, const Rep& y) {
  require_compatible(x, y, "tensor_obj");
  return Rep::from_impl(std::make_shared<TensorImpl>(x, y));
}

Morphism tensor_mor(const Morphism& f, const Morphism& g) {
  require_compatible(f.source(), g.source(), "tensor_mor");
  return Morphism::unchecked(tensor_obj(f.source(), g.source()), tensor_obj(f.target(), g.target()),
                             exactlin::mat_kron(f.matrix(), g.matrix()));
}

Morphism symmetry(const Rep& x, const Rep& y) {
  require_compatible(x, y, "symmetry");
  const std::size_t dx = x.dim(), dy = y.dim();
  std::vector<std::size_t> perm(dx * dy);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dy; ++j) perm[i * dy + j] = j * dx + i;
  }
  return Morphism::unchecked(tensor_obj(x, y), tensor_obj(y, x), exactlin::permutation_matrix(perm, x.field()));
}

Rep restrict(const Rep& x, const groups::Subgroup& h) {
  if (h.parent() != x.group()) throw RepError("restrict: subgroup of a different group");
  return Rep::from_impl(std::make_shared<RestrictedImpl>(x, h));
}

Morphism restrict_mor(const Morphism& f, const groups::Subgroup& h) {
  return Morphism::unchecked(restrict(f.source(), h), restrict(f.target(), h), f.matrix());
}

Rep direct_sum(const Rep& x, const Rep& y) {
  require_compatible(x, y, "direct_sum");
  return Rep::from_impl(std::make_shared<SumImpl>(x, y));
}

Rep coset_permutation_rep(const GroupPtr& g, const groups::Subgroup& k, Field f) {
  if (k.parent() != g) throw RepError("coset_permutation_rep: subgroup of a different group");
  const std::size_t n = g->order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(n, unset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != unset) continue;
    for (Element kk : k.elements()) coset[g->mul(x, kk)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t d = reps.size();
  std::vector<Matrix> actions;
  actions.reserve(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<std::size_t> perm(d);
    for (std::size_t c = 0; c < d; ++c) perm[c] = coset[g->mul(a, reps[c])];
    actions.push_back(exactlin::permutation_matrix(perm, f));
  }
  std::string name = k.order() == 1 ? "k[G]" : k.is_whole_group() ? "1" : "k[G/K" + std::to_string(k.order()) + "]";
  return Rep::from_matrices(g, f, d, std::move(actions), name);
}

Rep regular_rep(const GroupPtr& g, Field f) { return coset_permutation_rep(g, groups::subgroup_generated(g, {}), f); }

}  // namespace sepmon::repcat
