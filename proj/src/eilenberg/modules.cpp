#include "sepmon/eilenberg/modules.hpp"

#include <random>

#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/tensor.hpp"

namespace sepmon::eilenberg {

using exactlin::Scalar;
using repcat::compose;
using repcat::tensor_mor;
using repcat::tensor_obj;

std::optional<LawFailure> module_axiom_violation(const AModule& m) {
  const RingObject& a = *m.ring;
  const Morphism id_x = Morphism::identity(m.carrier);
  const Morphism id_a = Morphism::identity(a.carrier);
  if (auto f = repcat::expect_equivariant("action equivariance", m.action)) return f;
  if (auto f = repcat::expect_equal("module associativity", compose(m.action, tensor_mor(a.mul, id_x)),
                                    compose(m.action, tensor_mor(id_a, m.action)))) {
    return f;
  }
  return repcat::expect_identity("module unit", compose(m.action, tensor_mor(a.unit, id_x)));
}

std::optional<LawFailure> linearity_violation(const AModule& m1, const AModule& m2, const Morphism& f) {
  return repcat::expect_equal("A-linearity", compose(f, m1.action),
                              compose(m2.action, tensor_mor(Morphism::identity(m1.ring->carrier), f)));
}

AModule free_module(const RingPtr& a, const Rep& y) {
  Rep carrier = tensor_obj(a->carrier, y);
  Morphism act = tensor_mor(a->mul, Morphism::identity(y));
  // (A (x) A) (x) y is A (x) (A (x) y) on the nose.
  return AModule{a, carrier, Morphism::unchecked(tensor_obj(a->carrier, carrier), carrier, act.matrix())};
}

AModule em_comparison(const Rep& n, const CosetSpace& cs, const RingPtr& standard) {
  const std::size_t k = cs.index(), d = n.dim();
  Rep carrier = adjunction::coind_obj(n, cs);
  Matrix act(k * d, k * k * d, n.field());
  const Scalar one = Scalar::one(n.field());
  for (std::size_t gamma = 0; gamma < k; ++gamma) {
    for (std::size_t i = 0; i < d; ++i) act(gamma * d + i, gamma * k * d + gamma * d + i) = one;
  }
  return AModule{standard, carrier, Morphism::unchecked(tensor_obj(standard->carrier, carrier), carrier, std::move(act))};
}

Morphism em_action_via_lambda(const Rep& n, const CosetSpace& cs, Field f) {
  Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
  Morphism c = monadring::canonical_ring_iso(cs, f).first;
  Morphism lambda = adjunction::lax_lambda(one_h, n, cs);
  Rep carrier = adjunction::coind_obj(n, cs);
  Morphism c_id = tensor_mor(c, Morphism::identity(carrier));
  // Coind(1 (x) n) is Coind n on the nose.
  return Morphism::unchecked(c_id.source(), carrier, lambda.matrix() * c_id.matrix());
}

Morphism em_action_via_pi(const Rep& n, const CosetSpace& cs, Field f) {
  Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
  Morphism c = monadring::canonical_ring_iso(cs, f).first;
  Rep carrier = adjunction::coind_obj(n, cs);
  Morphism pi = adjunction::projection_pi(one_h, carrier, cs);
  Morphism eps = adjunction::coind_mor(adjunction::counit_eps(n, cs), cs);
  Morphism pi_tagged = Morphism::unchecked(pi.source(), eps.source(), pi.matrix());
  return compose(compose(eps, pi_tagged), tensor_mor(c, Morphism::identity(carrier)));
}

Morphism em_comparison_mor(const Morphism& f, const CosetSpace& cs) { return adjunction::coind_mor(f, cs); }

Split split_idempotent(const Morphism& e) {
  const Rep& x = e.source();
  if (!x.same_as(e.target())) throw repcat::RepError("split_idempotent: not an endomorphism");
  if (!(e.matrix() * e.matrix() == e.matrix())) throw repcat::RepError("split_idempotent: e*e != e");
  if (auto v = repcat::expect_equivariant("split_idempotent", e)) throw repcat::RepError(v->describe());

  auto cb = exactlin::rank_and_column_basis(e.matrix());
  const Matrix& m = cb.basis;
  Matrix p = cb.projector_witness * e.matrix();
  std::vector<Matrix> actions;
  actions.reserve(x.group()->order());
  for (groups::Element g = 0; g < x.group()->order(); ++g) actions.push_back(p * x.action(g) * m);
  Rep image = Rep::from_matrices(x.group(), x.field(), cb.rank, std::move(actions), "Img(" + x.describe() + ")");
  return Split{image, Morphism::unchecked(x, image, std::move(p)), Morphism::unchecked(image, x, m)};
}

Morphism em_idempotent(const AModule& m, const CosetSpace& cs) {
  const Field f = m.carrier.field();
  Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
  Rep res_x = adjunction::res(m.carrier, cs);
  Matrix c_inv = monadring::canonical_ring_iso(cs, f).second.matrix();
  Matrix pi_inv = adjunction::projection_pi_inverse(one_h, m.carrier, cs).matrix();
  Matrix xi = adjunction::section_xi(res_x, cs).matrix();
  Matrix e = m.action.matrix() * (exactlin::mat_kron(c_inv, Matrix::identity(m.carrier.dim(), f)) * (pi_inv * xi));
  return Morphism::unchecked(res_x, res_x, std::move(e));
}

Split em_inverse(const AModule& m, const CosetSpace& cs) {
  if (auto v = module_axiom_violation(m)) throw repcat::RepError("em_inverse: " + v->describe());
  return split_idempotent(em_idempotent(m, cs));
}

std::vector<Morphism> module_hom_space(const AModule& m1, const AModule& m2) {
  if (m1.ring != m2.ring) throw repcat::RepError("module_hom_space: modules over different rings");
  repcat::require_compatible(m1.carrier, m2.carrier, "module_hom_space");
  const Matrix& r1 = m1.action.matrix();
  const Matrix& r2 = m2.action.matrix();
  const Matrix id_a = Matrix::identity(m1.ring->carrier.dim(), m1.carrier.field());
  std::vector<repcat::LinearConstraint> constraints;
  constraints.push_back([&](const Matrix& f) { return f * r1 - r2 * exactlin::mat_kron(id_a, f); });
  const auto& g1 = m1.carrier.generator_actions();
  const auto& g2 = m2.carrier.generator_actions();
  for (std::size_t k = 0; k < g1.size(); ++k) {
    constraints.push_back([&, k](const Matrix& f) { return f * g1[k] - g2[k] * f; });
  }
  auto mats = repcat::solve_matrix_constraints(m2.carrier.dim(), m1.carrier.dim(), m1.carrier.field(), constraints);
  std::vector<Morphism> out;
  out.reserve(mats.size());
  for (auto& f : mats) out.push_back(Morphism::unchecked(m1.carrier, m2.carrier, std::move(f)));
  return out;
}

std::optional<ModuleIso> find_module_iso(const AModule& m1, const AModule& m2) {
  if (m1.carrier.dim() != m2.carrier.dim()) return std::nullopt;
  std::vector<Matrix> mats;
  for (const auto& f : module_hom_space(m1, m2)) mats.push_back(f.matrix());
  auto pair = repcat::find_invertible_combination(mats, m1.carrier.field());
  if (!pair) return std::nullopt;
  return ModuleIso{Morphism::unchecked(m1.carrier, m2.carrier, std::move(pair->forward)),
                   Morphism::unchecked(m2.carrier, m1.carrier, std::move(pair->inverse))};
}

AModule split_module(const AModule& m, const Morphism& e) {
  Split s = split_idempotent(e);
  Morphism act = compose(s.retraction,
                         compose(m.action, tensor_mor(Morphism::identity(m.ring->carrier), s.inclusion)));
  return AModule{m.ring, s.image, act};
}

std::optional<Morphism> find_module_idempotent(const AModule& m, std::uint64_t seed) {
  constexpr std::size_t budget = 64;
  const Field f = m.carrier.field();
  const std::size_t d = m.carrier.dim();
  auto basis = module_hom_space(m, m);
  if (basis.size() < 2 || d < 2) return std::nullopt;

  std::vector<std::int64_t> shifts;
  if (f.is_rational()) {
    for (std::int64_t t = -4; t <= 4; ++t) shifts.push_back(t);
  } else {
    const auto p = std::min<std::int64_t>(f.characteristic(), 16);
    for (std::int64_t t = 0; t < p; ++t) shifts.push_back(t);
  }
  std::vector<std::pair<std::size_t, std::int64_t>> candidates;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (auto t : shifts) candidates.emplace_back(i, t);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[repcat::draw(rng(), i)]);
  if (candidates.size() > budget) candidates.resize(budget);

  const Matrix id = Matrix::identity(d, f);
  for (const auto& [i, t] : candidates) {
    Matrix phi = basis[i].matrix() - id.scaled(Scalar::from_int(f, t));
    // Fitting decomposition: powers of phi stabilize in rank, and then
    // the space is Img + Ker of that power.
    Matrix power = phi;
    std::size_t r = exactlin::rank(power);
    if (r == d || r == 0) continue;
    for (std::size_t k = 1; k < d; ++k) {
      Matrix next = power * phi;
      std::size_t rn = exactlin::rank(next);
      power = std::move(next);
      if (rn == r) break;
      r = rn;
    }
    if (r == 0) continue;
    auto img = exactlin::rank_and_column_basis(power);
    Matrix ker = exactlin::nullspace(power);
    Matrix q = exactlin::hstack(img.basis, ker);
    auto q_inv = exactlin::mat_inverse(q);
    if (!q_inv) continue;
    Matrix keep(d, d, f);
    for (std::size_t j = 0; j < img.rank; ++j) keep(j, j) = Scalar::one(f);
    return Morphism::unchecked(m.carrier, m.carrier, q * keep * *q_inv);
  }
  return std::nullopt;
}

std::pair<Morphism, Morphism> extension_of_scalars_iso(const Rep& y, const CosetSpace& cs, Field f) {
  Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
  auto [c, c_inv] = monadring::canonical_ring_iso(cs, f);
  Rep target = adjunction::coind_obj(adjunction::res(y, cs), cs);
  Rep source = tensor_obj(c.source(), y);
  Matrix id_y = Matrix::identity(y.dim(), f);
  Matrix t = adjunction::projection_pi(one_h, y, cs).matrix() * exactlin::mat_kron(c.matrix(), id_y);
  Matrix t_inv = exactlin::mat_kron(c_inv.matrix(), id_y) * adjunction::projection_pi_inverse(one_h, y, cs).matrix();
  return {Morphism::unchecked(source, target, std::move(t)), Morphism::unchecked(target, source, std::move(t_inv))};
}

}  // namespace sepmon::eilenberg
