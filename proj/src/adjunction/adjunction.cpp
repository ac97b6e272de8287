#include "sepmon/adjunction/adjunction.hpp"

#include "sepmon/repcat/tensor.hpp"

namespace sepmon::adjunction {

using exactlin::Scalar;
using groups::Element;

namespace {

class CoindImpl final : public repcat::RepImpl {
 public:
  CoindImpl(Rep n, CosetSpace cs)
      : RepImpl(cs.group(), n.field(), cs.index() * n.dim()), n_(std::move(n)), cs_(std::move(cs)) {}

  Matrix action(Element g) const override {
    const std::size_t d = n_.dim();
    const auto& reps = cs_.representatives();
    Matrix m(dim(), dim(), field());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      auto fz = cs_.factorize(cs_.group()->mul(reps[i], g));
      m.set_block(i * d, fz.coset * d, n_.action(cs_.subgroup().to_local(fz.h)));
    }
    return m;
  }
  std::string describe() const override { return "Coind(" + n_.describe() + ")"; }

 private:
  Rep n_;
  CosetSpace cs_;
};

void require_subgroup_rep(const Rep& n, const CosetSpace& cs, const char* where) {
  if (n.group() != cs.subgroup_group()) throw repcat::RepError(std::string(where) + ": not a representation of H");
}

void require_group_rep(const Rep& x, const CosetSpace& cs, const char* where) {
  if (x.group() != cs.group()) throw repcat::RepError(std::string(where) + ": not a representation of G");
}

// blockdiag_r (I_dy (x) x(r)) or, with invert set, x(r^-1).
Matrix twisted_blocks(std::size_t dy, const Rep& x, const CosetSpace& cs, bool invert) {
  const std::size_t dx = x.dim();
  const std::size_t block = dy * dx;
  const auto& reps = cs.representatives();
  Matrix m(reps.size() * block, reps.size() * block, x.field());
  Matrix id = Matrix::identity(dy, x.field());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Element r = invert ? cs.group()->inv(reps[i]) : reps[i];
    m.set_block(i * block, i * block, exactlin::mat_kron(id, x.action(r)));
  }
  return m;
}

}  // namespace

Rep coind_obj(const Rep& n, const CosetSpace& cs) {
  require_subgroup_rep(n, cs, "coind_obj");
  return Rep::from_impl(std::make_shared<CoindImpl>(n, cs));
}

Morphism coind_mor(const Morphism& f, const CosetSpace& cs) {
  require_subgroup_rep(f.source(), cs, "coind_mor");
  Matrix m = exactlin::mat_kron(Matrix::identity(cs.index(), f.matrix().field()), f.matrix());
  return Morphism::unchecked(coind_obj(f.source(), cs), coind_obj(f.target(), cs), std::move(m));
}

Rep res(const Rep& x, const CosetSpace& cs) { return repcat::restrict(x, cs.subgroup()); }

Morphism res_mor(const Morphism& f, const CosetSpace& cs) { return repcat::restrict_mor(f, cs.subgroup()); }

Morphism unit_eta(const Rep& m, const CosetSpace& cs) {
  require_group_rep(m, cs, "unit_eta");
  const auto& reps = cs.representatives();
  Matrix out(reps.size() * m.dim(), m.dim(), m.field());
  for (std::size_t i = 0; i < reps.size(); ++i) out.set_block(i * m.dim(), 0, m.action(reps[i]));
  return Morphism::unchecked(m, coind_obj(res(m, cs), cs), std::move(out));
}

Morphism counit_eps(const Rep& n, const CosetSpace& cs) {
  require_subgroup_rep(n, cs, "counit_eps");
  Matrix out(n.dim(), cs.index() * n.dim(), n.field());
  out.set_block(0, 0, Matrix::identity(n.dim(), n.field()));
  return Morphism::unchecked(res(coind_obj(n, cs), cs), n, std::move(out));
}

Morphism section_xi(const Rep& n, const CosetSpace& cs) {
  require_subgroup_rep(n, cs, "section_xi");
  Matrix out(cs.index() * n.dim(), n.dim(), n.field());
  out.set_block(0, 0, Matrix::identity(n.dim(), n.field()));
  return Morphism::unchecked(n, res(coind_obj(n, cs), cs), std::move(out));
}

Morphism lax_iota(const CosetSpace& cs, Field f) {
  Matrix ones(cs.index(), 1, f);
  for (std::size_t i = 0; i < cs.index(); ++i) ones(i, 0) = Scalar::one(f);
  return Morphism::unchecked(repcat::unit_rep(cs.group(), f), coind_obj(repcat::unit_rep(cs.subgroup_group(), f), cs),
                             std::move(ones));
}

Morphism lax_lambda(const Rep& x, const Rep& y, const CosetSpace& cs) {
  require_subgroup_rep(x, cs, "lax_lambda");
  require_subgroup_rep(y, cs, "lax_lambda");
  const std::size_t n = cs.index(), dx = x.dim(), dy = y.dim();
  Matrix m(n * dx * dy, n * dx * n * dy, x.field());
  const Scalar one = Scalar::one(x.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < dx; ++i) {
      for (std::size_t j = 0; j < dy; ++j) {
        std::size_t src = (r * dx + i) * (n * dy) + r * dy + j;
        std::size_t tgt = r * dx * dy + i * dy + j;
        m(tgt, src) = one;
      }
    }
  }
  return Morphism::unchecked(repcat::tensor_obj(coind_obj(x, cs), coind_obj(y, cs)),
                             coind_obj(repcat::tensor_obj(x, y), cs), std::move(m));
}

Morphism lax_lambda_composite(const Rep& x, const Rep& y, const CosetSpace& cs) {
  Rep ux = coind_obj(x, cs);
  Rep uy = coind_obj(y, cs);
  Morphism eta = unit_eta(repcat::tensor_obj(ux, uy), cs);
  Morphism eps = repcat::tensor_mor(counit_eps(x, cs), counit_eps(y, cs));
  return repcat::compose(coind_mor(eps, cs), eta);
}

Morphism projection_pi(const Rep& y, const Rep& x, const CosetSpace& cs) {
  require_subgroup_rep(y, cs, "projection_pi");
  require_group_rep(x, cs, "projection_pi");
  return Morphism::unchecked(repcat::tensor_obj(coind_obj(y, cs), x),
                             coind_obj(repcat::tensor_obj(y, res(x, cs)), cs), twisted_blocks(y.dim(), x, cs, false));
}

Matrix rho_product_iso(const Rep& n, const CosetSpace& cs) {
  return Matrix::identity(cs.index() * n.dim(), n.field());
}

Matrix product_side_projection(const Rep& y, const Rep& x, const CosetSpace& cs) {
  return twisted_blocks(y.dim(), x, cs, false);
}

Morphism projection_pi_inverse(const Rep& y, const Rep& x, const CosetSpace& cs) {
  require_subgroup_rep(y, cs, "projection_pi_inverse");
  require_group_rep(x, cs, "projection_pi_inverse");
  Rep target = repcat::tensor_obj(y, res(x, cs));
  // (rho_y (x) id)^-1 after the inverse product-side map after rho. The rho
  // maps are permutation matrices, so transposes invert them.
  Matrix rho_src = exactlin::mat_kron(rho_product_iso(y, cs), Matrix::identity(x.dim(), x.field()));
  Matrix m = rho_src.transpose() * twisted_blocks(y.dim(), x, cs, true) * rho_product_iso(target, cs);
  return Morphism::unchecked(coind_obj(target, cs), repcat::tensor_obj(coind_obj(y, cs), x), std::move(m));
}

Morphism projection_pi_composite(const Rep& y, const Rep& x, const CosetSpace& cs) {
  Rep uy = coind_obj(y, cs);
  Morphism id_eta = repcat::tensor_mor(Morphism::identity(uy), unit_eta(x, cs));
  return repcat::compose(lax_lambda(y, res(x, cs), cs), id_eta);
}

Morphism transfer_zeta(const Rep& x, const CosetSpace& cs) {
  require_group_rep(x, cs, "transfer_zeta");
  const auto& reps = cs.representatives();
  Matrix m(x.dim(), reps.size() * x.dim(), x.field());
  for (std::size_t i = 0; i < reps.size(); ++i) m.set_block(0, i * x.dim(), x.action(cs.group()->inv(reps[i])));
  return Morphism::unchecked(coind_obj(res(x, cs), cs), x, std::move(m));
}

}  // namespace sepmon::adjunction
