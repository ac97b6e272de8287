#include <algorithm>
#include <set>

#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/monadring/monad.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/tensor.hpp"
#include "sepmon/verify/suite.hpp"

namespace sepmon::verify {

namespace {

using namespace adjunction;
using eilenberg::AModule;
using repcat::LawFailure;
using repcat::compose;
using repcat::expect_equal;
using repcat::expect_equivariant;
using repcat::expect_identity;
using Outcome = std::optional<Failure>;

Failure fail(const LawFailure& lf, std::vector<std::string> objects) {
  return Failure{lf.law, lf.describe(), std::move(objects), lf.lhs, lf.rhs, lf.diff};
}

Failure fail(std::string law, std::string message, std::vector<std::string> objects) {
  return Failure{std::move(law), std::move(message), std::move(objects), std::nullopt, std::nullopt, std::nullopt};
}

std::size_t family(const Case& c) { return c.config().family_size; }
std::size_t twice(const Case& c) { return 2 * c.config().family_size; }
std::size_t single(const Case&) { return 1; }

template <class T>
const T& next(const std::vector<T>& v, std::size_t i, std::size_t step = 1) {
  return v[(i + step) % v.size()];
}

/// Equal dimension and identical generator actions.
std::optional<LawFailure> same_rep(const std::string& law, const Rep& a, const Rep& b) {
  if (a.group() != b.group() || a.dim() != b.dim()) {
    return LawFailure{law + " (groups or dimensions differ)", Matrix(a.dim(), a.dim(), a.field()),
                      Matrix(b.dim(), b.dim(), b.field()), std::nullopt};
  }
  const auto& gens = a.group()->generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto d = expect_equal(law + " at " + a.group()->label(gens[k]), a.generator_actions()[k], b.generator_actions()[k]);
    if (d) return d;
  }
  return std::nullopt;
}

/// Equivariance at every group element, not just generators.
std::optional<LawFailure> exhaustive_equivariance(const std::string& law, const Morphism& f) {
  const auto& g = f.source().group();
  for (groups::Element e = 0; e < g->order(); ++e) {
    auto d = expect_equal(law + " at " + g->label(e), f.matrix() * f.source().action(e),
                          f.target().action(e) * f.matrix());
    if (d) return d;
  }
  return std::nullopt;
}

/// The inverse of f as an unchecked morphism, or nullopt if singular.
std::optional<Morphism> invert(const Morphism& f) {
  if (f.source().dim() != f.target().dim()) return std::nullopt;
  auto inv = exactlin::mat_inverse(f.matrix());
  if (!inv) return std::nullopt;
  return Morphism::unchecked(f.target(), f.source(), std::move(*inv));
}

// Group checks

Outcome group_axioms(const Case& c, std::size_t i) {
  const auto& g = c.group();
  const auto& h = c.subgroup();
  const auto& cs = c.cosets();
  const std::vector<std::string> objs{c.config().group};
  if (i == 0) {
    auto v = groups::FiniteGroup::axiom_violations(g->table());
    if (!v.empty()) return fail("group.table", v.front(), objs);
    for (groups::Element x = 0; x < g->order(); ++x) {
      if (g->mul(x, g->inv(x)) != 0 || g->mul(g->inv(x), x) != 0) {
        return fail("group.inverse", "inverse of " + g->label(x) + " is wrong", objs);
      }
    }
    return std::nullopt;
  }
  if (i == 1) {
    for (auto a : h.elements()) {
      for (auto b : h.elements()) {
        if (!h.contains(g->mul(a, b))) {
          return fail("subgroup.closure", g->label(a) + " * " + g->label(b) + " leaves H", objs);
        }
      }
    }
    if (g->order() % h.order() != 0 || cs.index() * h.order() != g->order()) {
      return fail("subgroup.lagrange",
                  "|G| = " + std::to_string(g->order()) + ", |H| = " + std::to_string(h.order()) +
                      ", [G:H] = " + std::to_string(cs.index()),
                  objs);
    }
    return std::nullopt;
  }
  std::vector<int> seen(g->order(), 0);
  for (std::size_t k = 0; k < cs.index(); ++k) {
    const auto& coset = cs.cosets()[k];
    if (coset.size() != h.order() || coset.front() != cs.representatives()[k]) {
      return fail("cosets.shape", "coset " + cs.coset_label(k) + " has the wrong size or representative", objs);
    }
    for (auto x : coset) ++seen[x];
  }
  for (groups::Element x = 0; x < g->order(); ++x) {
    if (seen[x] != 1) return fail("cosets.partition", g->label(x) + " is not in exactly one coset", objs);
    auto fct = cs.factorize(x);
    if (!h.contains(fct.h) || fct.r != cs.representatives()[fct.coset] || g->mul(fct.h, fct.r) != x ||
        cs.coset_of(x) != fct.coset) {
      return fail("cosets.factorization", "x = h r fails for " + g->label(x), objs);
    }
  }
  return std::nullopt;
}

// Representations

Outcome rep_homomorphism(const Case& c, std::size_t i) {
  const std::size_t n = family(c);
  const Rep& x = i < n ? c.g_reps()[i] : c.h_reps()[i - n];
  auto v = repcat::homomorphism_violation(x);
  if (!v) return std::nullopt;
  const auto& g = x.group();
  return Failure{"rep.homomorphism", v->describe(), {x.describe()}, x.action(g->mul(v->a, v->b)),
                 x.action(v->a) * x.action(v->b), v->diff};
}

Outcome rep_tensor_strict(const Case& c, std::size_t i) {
  const auto& reps = c.tiny_reps();
  const Rep& x = reps[i];
  const Rep& y = next(reps, i);
  const Rep& z = next(reps, i, 2);
  const std::vector<std::string> objs{x.describe(), y.describe(), z.describe()};
  using repcat::tensor_obj;
  if (auto d = same_rep("tensor.associator", tensor_obj(tensor_obj(x, y), z), tensor_obj(x, tensor_obj(y, z)))) {
    return fail(*d, objs);
  }
  const Rep one = repcat::unit_rep(c.group(), c.field());
  if (auto d = same_rep("tensor.left_unitor", tensor_obj(one, x), x)) return fail(*d, objs);
  if (auto d = same_rep("tensor.right_unitor", tensor_obj(x, one), x)) return fail(*d, objs);
  const auto& h = c.subgroup();
  if (auto d = same_rep("tensor.restriction", repcat::restrict(tensor_obj(x, y), h),
                        tensor_obj(repcat::restrict(x, h), repcat::restrict(y, h)))) {
    return fail(*d, objs);
  }
  auto s = repcat::symmetry(x, y);
  if (auto d = expect_equivariant("tensor.symmetry_equivariant", s)) return fail(*d, objs);
  if (auto d = expect_identity("tensor.symmetry_involution", compose(repcat::symmetry(y, x), s))) {
    return fail(*d, objs);
  }
  return std::nullopt;
}

Outcome rep_hom_space(const Case& c, std::size_t i) {
  const auto& reps = c.g_reps();
  const auto& mors = c.g_morphisms();
  const Rep& x = reps[i];
  const Rep& y = next(reps, i);
  const Rep& z = next(reps, i, 2);
  const std::vector<std::string> objs{x.describe(), y.describe(), z.describe()};
  auto span_of = [](const std::vector<Morphism>& b) {
    std::vector<Matrix> out;
    for (const auto& m : b) out.push_back(m.matrix());
    return out;
  };
  auto hom_xy = repcat::hom_space_basis(x, y);
  for (const auto& b : hom_xy) {
    if (auto d = expect_equivariant("hom_space.basis_equivariant", b)) return fail(*d, objs);
  }
  if (!repcat::express_in_basis(span_of(hom_xy), mors[i].matrix())) {
    return fail("hom_space.contains_family_morphism", "the family morphism is outside the computed span", objs);
  }
  if (!repcat::express_in_basis(span_of(repcat::hom_space_basis(x, x)), Matrix::identity(x.dim(), c.field()))) {
    return fail("hom_space.contains_identity", "id is outside the computed endomorphism span", objs);
  }
  auto gf = compose(next(mors, i), mors[i]);
  if (!repcat::express_in_basis(span_of(repcat::hom_space_basis(x, z)), gf.matrix())) {
    return fail("hom_space.closed_under_composition", "g f is outside the computed span", objs);
  }
  return std::nullopt;
}

Outcome morphism_equivariance(const Case& c, std::size_t i) {
  const std::size_t n = family(c);
  const Morphism& f = i < n ? c.g_morphisms()[i] : c.h_morphisms()[i - n];
  if (auto d = exhaustive_equivariance("morphism.equivariance", f)) {
    return fail(*d, {f.source().describe(), f.target().describe()});
  }
  return std::nullopt;
}

// Adjunction

Outcome adjunction_triangle(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const std::size_t n = family(c);
  if (i < n) {
    const Rep& m = c.g_reps()[i];
    auto lhs = compose(counit_eps(res(m, cs), cs), res_mor(unit_eta(m, cs), cs));
    if (auto d = expect_identity("triangle.eps_Res_after_Res_eta", lhs)) return fail(*d, {m.describe()});
    return std::nullopt;
  }
  const Rep& nn = c.h_reps()[i - n];
  auto lhs = compose(coind_mor(counit_eps(nn, cs), cs), unit_eta(coind_obj(nn, cs), cs));
  if (auto d = expect_identity("triangle.Coind_eps_after_eta_Coind", lhs)) return fail(*d, {nn.describe()});
  return std::nullopt;
}

Outcome adjunction_counit_section(const Case& c, std::size_t i) {
  const Rep& n = c.h_reps()[i];
  auto xi = c.xi(n);
  if (auto d = expect_equivariant("xi.equivariant", xi)) return fail(*d, {n.describe()});
  if (auto d = expect_identity("eps_after_xi", compose(counit_eps(n, c.cosets()), xi))) {
    return fail(*d, {n.describe()});
  }
  return std::nullopt;
}

Outcome adjunction_xi_natural(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const Morphism& f = c.h_morphisms()[i];
  auto lhs = compose(res_mor(coind_mor(f, cs), cs), c.xi(f.source()));
  auto rhs = compose(c.xi(f.target()), f);
  if (auto d = expect_equal("xi.naturality", lhs, rhs)) return fail(*d, {f.source().describe(), f.target().describe()});
  return std::nullopt;
}

Outcome adjunction_eta_natural(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const Morphism& f = c.g_morphisms()[i];
  auto lhs = compose(coind_mor(res_mor(f, cs), cs), unit_eta(f.source(), cs));
  auto rhs = compose(unit_eta(f.target(), cs), f);
  if (auto d = expect_equal("eta.naturality", lhs, rhs)) return fail(*d, {f.source().describe(), f.target().describe()});
  return std::nullopt;
}

Outcome adjunction_eps_natural(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const Morphism& f = c.h_morphisms()[i];
  auto lhs = compose(f, counit_eps(f.source(), cs));
  auto rhs = compose(counit_eps(f.target(), cs), res_mor(coind_mor(f, cs), cs));
  if (auto d = expect_equal("eps.naturality", lhs, rhs)) return fail(*d, {f.source().describe(), f.target().describe()});
  return std::nullopt;
}

// Lax monoidal structure and the projection formula

Outcome lax_unit_law(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const Rep& n = c.h_reps()[i];
  const Rep one_h = repcat::unit_rep(cs.subgroup_group(), c.field());
  const Rep cn = coind_obj(n, cs);
  const auto iota = lax_iota(cs, c.field());
  const auto id = Morphism::identity(cn);
  if (auto d = expect_equivariant("lambda.equivariant", lax_lambda(one_h, n, cs))) return fail(*d, {n.describe()});
  auto left = compose(lax_lambda(one_h, n, cs), repcat::tensor_mor(iota, id));
  if (auto d = expect_equal("lambda.left_unit", left.matrix(), id.matrix())) return fail(*d, {n.describe()});
  auto right = compose(lax_lambda(n, one_h, cs), repcat::tensor_mor(id, iota));
  if (auto d = expect_equal("lambda.right_unit", right.matrix(), id.matrix())) return fail(*d, {n.describe()});
  return std::nullopt;
}

Outcome lax_lambda_composite_check(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& reps = c.small_h_reps();
  const Rep& x = reps[i];
  const Rep& y = next(reps, i);
  const std::vector<std::string> objs{x.describe(), y.describe()};
  auto lam = lax_lambda(x, y, cs);
  if (auto d = expect_equivariant("lambda.equivariant", lam)) return fail(*d, objs);
  if (auto d = expect_equal("lambda.composite", lam, lax_lambda_composite(x, y, cs))) return fail(*d, objs);
  return std::nullopt;
}

Outcome projection_invertible(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& [y, x] = c.pi_pairs()[i];
  const std::vector<std::string> objs{y.describe(), x.describe()};
  auto pi = projection_pi(y, x, cs);
  auto inv = projection_pi_inverse(y, x, cs);
  if (auto d = expect_equivariant("pi.equivariant", pi)) return fail(*d, objs);
  if (auto d = expect_equivariant("pi_inverse.equivariant", inv)) return fail(*d, objs);
  if (auto d = expect_identity("pi_inverse_after_pi", compose(inv, pi))) return fail(*d, objs);
  if (auto d = expect_identity("pi_after_pi_inverse", compose(pi, inv))) return fail(*d, objs);
  return std::nullopt;
}

Outcome projection_composite(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& [y, x] = c.pi_pairs()[i];
  if (auto d = expect_equal("pi.composite", projection_pi(y, x, cs), projection_pi_composite(y, x, cs))) {
    return fail(*d, {y.describe(), x.describe()});
  }
  return std::nullopt;
}

Outcome projection_rho_square(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& [y, x] = c.pi_pairs()[i];
  const Rep yx = repcat::tensor_obj(y, res(x, cs));
  const Matrix id_x = Matrix::identity(x.dim(), c.field());
  auto lhs = rho_product_iso(yx, cs) * projection_pi(y, x, cs).matrix();
  auto rhs = product_side_projection(y, x, cs) * exactlin::mat_kron(rho_product_iso(y, cs), id_x);
  if (auto d = expect_equal("pi.product_square", lhs, rhs)) return fail(*d, {y.describe(), x.describe()});
  return std::nullopt;
}

// Monad morphism

Outcome monad_morphism_unit(const Case& c, std::size_t i) {
  const Rep& x = c.monad_reps()[i];
  for (const auto& phi : {monadring::pi_as_monad_morphism(c.cosets(), c.field()),
                          monadring::standard_pi_monad_morphism(c.cosets(), c.field())}) {
    if (auto d = monadring::monad_morphism_unit_violation(phi, x)) return fail(*d, {phi.source.name, x.describe()});
  }
  return std::nullopt;
}

Outcome monad_morphism_mult(const Case& c, std::size_t i) {
  const Rep& x = c.monad_reps()[i];
  for (const auto& phi : {monadring::pi_as_monad_morphism(c.cosets(), c.field()),
                          monadring::standard_pi_monad_morphism(c.cosets(), c.field())}) {
    if (auto d = monadring::monad_morphism_mult_violation(phi, x)) return fail(*d, {phi.source.name, x.describe()});
  }
  return std::nullopt;
}

// Rings

/// Independent recomputation of the right cosets and the structure constants.
Outcome ring_structure_constants(const Case& c, std::size_t) {
  const auto& g = c.group();
  const auto& a = *c.standard_ring();
  const Field f = c.field();
  std::set<std::vector<groups::Element>> found;
  for (groups::Element x = 0; x < g->order(); ++x) {
    std::vector<groups::Element> coset;
    for (auto h : c.subgroup().elements()) coset.push_back(g->mul(h, x));
    std::sort(coset.begin(), coset.end());
    found.insert(coset);
  }
  // std::set orders sorted vectors by their least element first.
  const std::vector<std::vector<groups::Element>> cosets(found.begin(), found.end());
  const std::size_t k = cosets.size();
  const std::vector<std::string> objs{a.carrier.describe()};
  if (a.carrier.dim() != k) {
    return fail("ring.dimension", "dim A = " + std::to_string(a.carrier.dim()) + " but there are " +
                                      std::to_string(k) + " cosets", objs);
  }
  auto coset_index = [&](groups::Element x) {
    for (std::size_t j = 0; j < k; ++j) {
      if (std::binary_search(cosets[j].begin(), cosets[j].end(), x)) return j;
    }
    return k;
  };
  Matrix expected(k, k * k, f);
  for (std::size_t j = 0; j < k; ++j) expected(j, j * k + j) = exactlin::Scalar::one(f);
  if (auto d = expect_equal("ring.structure_constants", a.mul.matrix(), expected)) return fail(*d, objs);
  Matrix unit(k, 1, f);
  for (std::size_t j = 0; j < k; ++j) unit(j, 0) = exactlin::Scalar::one(f);
  if (auto d = expect_equal("ring.unit", a.unit.matrix(), unit)) return fail(*d, objs);
  for (groups::Element x = 0; x < g->order(); ++x) {
    Matrix act(k, k, f);
    for (std::size_t j = 0; j < k; ++j) act(coset_index(g->mul(cosets[j].front(), g->inv(x))), j) = exactlin::Scalar::one(f);
    if (auto d = expect_equal("ring.permutation_action at " + g->label(x), a.carrier.action(x), act)) {
      return fail(*d, objs);
    }
  }
  return std::nullopt;
}

Outcome ring_standard_axioms(const Case& c, std::size_t) {
  const auto& a = *c.standard_ring();
  if (auto d = monadring::structure_equivariance_violation(a)) return fail(*d, {a.carrier.describe()});
  if (auto d = monadring::ring_axiom_violation(a)) return fail(*d, {a.carrier.describe()});
  return std::nullopt;
}

Outcome ring_standard_commutative(const Case& c, std::size_t) {
  const auto& a = *c.standard_ring();
  if (auto d = monadring::commutativity_violation(a)) return fail(*d, {a.carrier.describe()});
  return std::nullopt;
}

Outcome ring_standard_separable(const Case& c, std::size_t) {
  const auto& a = *c.standard_ring();
  if (auto d = monadring::separability_violation(a)) return fail(*d, {a.carrier.describe()});
  return std::nullopt;
}

Outcome ring_adjunction_axioms(const Case& c, std::size_t) {
  auto a = monadring::ring_from_adjunction(c.cosets(), c.field());
  if (auto d = monadring::structure_equivariance_violation(a)) return fail(*d, {a.carrier.describe()});
  if (auto d = monadring::ring_axiom_violation(a)) return fail(*d, {a.carrier.describe()});
  if (auto d = monadring::commutativity_violation(a)) return fail(*d, {a.carrier.describe()});
  return std::nullopt;
}

Outcome ring_canonical_iso(const Case& c, std::size_t) {
  const auto& std_ring = *c.standard_ring();
  auto adj = monadring::ring_from_adjunction(c.cosets(), c.field());
  auto [iso, inv] = monadring::canonical_ring_iso(c.cosets(), c.field());
  const std::vector<std::string> objs{std_ring.carrier.describe(), adj.carrier.describe()};
  if (auto d = expect_equivariant("canonical_iso.equivariant", iso)) return fail(*d, objs);
  if (auto d = expect_identity("canonical_iso.inverse_after_iso", compose(inv, iso))) return fail(*d, objs);
  if (auto d = expect_identity("canonical_iso.iso_after_inverse", compose(iso, inv))) return fail(*d, objs);
  if (auto d = expect_equal("canonical_iso.multiplicative", compose(iso, std_ring.mul),
                            compose(adj.mul, repcat::tensor_mor(iso, iso)))) {
    return fail(*d, objs);
  }
  if (auto d = expect_equal("canonical_iso.unital", compose(iso, std_ring.unit), adj.unit)) return fail(*d, objs);
  auto moved = monadring::transport(std_ring, iso, inv);
  if (auto d = expect_equal("canonical_iso.transported_mul", moved.mul.matrix(), adj.mul.matrix())) {
    return fail(*d, objs);
  }
  if (auto d = monadring::separability_violation(moved)) return fail(*d, objs);
  return std::nullopt;
}

// Monads

Outcome monad_adjunction_laws(const Case& c, std::size_t i) {
  const Rep& x = c.monad_reps()[i];
  auto t = monadring::monad_from_adjunction(c.cosets());
  if (auto d = monadring::monad_law_violation(t, x)) return fail(*d, {t.name, x.describe()});
  if (auto d = monadring::monad_separability_violation(t, x)) return fail(*d, {t.name, x.describe()});
  return std::nullopt;
}

Outcome monad_ring_laws(const Case& c, std::size_t i) {
  const Rep& x = c.monad_reps()[i];
  auto t = monadring::monad_from_ring(*c.standard_ring());
  if (auto d = monadring::monad_law_violation(t, x)) return fail(*d, {t.name, x.describe()});
  if (auto d = monadring::monad_separability_violation(t, x)) return fail(*d, {t.name, x.describe()});
  return std::nullopt;
}

/// Separability of Coind Res with the section built from xi.
Outcome monad_separable_xi(const Case& c, std::size_t i) {
  const Rep& x = c.monad_reps()[i];
  const auto& cs = c.cosets();
  auto t = monadring::monad_from_adjunction(cs);
  t.sigma_at = [&c, &cs](const Rep& y) { return coind_mor(c.xi(res(y, cs)), cs); };
  if (auto d = monadring::monad_separability_violation(t, x)) return fail(*d, {t.name, x.describe()});
  return std::nullopt;
}

Outcome monad_iso(const Case& c, std::size_t i) {
  const auto& reps = c.monad_reps();
  const Rep& x = reps[i];
  const Rep& y = next(reps, i);
  const std::vector<std::string> objs{x.describe(), y.describe()};
  auto phi = monadring::standard_pi_monad_morphism(c.cosets(), c.field());
  auto px = phi.at(x);
  if (auto d = expect_equivariant("monad_iso.equivariant", px)) return fail(*d, objs);
  auto inv = invert(px);
  if (!inv) return fail("monad_iso.invertible", "the component at x is singular", objs);
  if (auto d = expect_equivariant("monad_iso.inverse_equivariant", *inv)) return fail(*d, objs);
  auto f = repcat::random_morphism(x, y, c.sub_seed(0x6d6f6e6164, i));
  auto lhs = compose(phi.at(y), phi.source.on_mor(f));
  auto rhs = compose(phi.target.on_mor(f), px);
  if (auto d = expect_equal("monad_iso.naturality", lhs, rhs)) return fail(*d, objs);
  return std::nullopt;
}

// Eilenberg-Moore

std::string module_name(const NamedModule& m) { return m.kind + " module on " + m.module.carrier.describe(); }

Outcome em_idempotent_check(const Case& c, std::size_t i) {
  const auto& m = c.modules()[i];
  if (auto d = eilenberg::module_axiom_violation(m.module)) return fail(*d, {module_name(m)});
  auto e = eilenberg::em_idempotent(m.module, c.cosets());
  if (auto d = expect_equivariant("em.idempotent_equivariant", e)) return fail(*d, {module_name(m)});
  if (auto d = expect_equal("em.idempotent_squares", compose(e, e), e)) return fail(*d, {module_name(m)});
  return std::nullopt;
}

Outcome em_comparison_check(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& f = c.h_morphisms()[i];
  const Rep& n = f.source();
  const std::vector<std::string> objs{n.describe()};
  auto e = eilenberg::em_comparison(n, cs, c.standard_ring());
  if (auto d = eilenberg::module_axiom_violation(e)) return fail(*d, objs);
  if (auto d = expect_equal("em.action_via_lambda", e.action.matrix(),
                            eilenberg::em_action_via_lambda(n, cs, c.field()).matrix())) {
    return fail(*d, objs);
  }
  if (auto d = expect_equal("em.action_via_pi", e.action.matrix(),
                            eilenberg::em_action_via_pi(n, cs, c.field()).matrix())) {
    return fail(*d, objs);
  }
  auto e2 = eilenberg::em_comparison(f.target(), cs, c.standard_ring());
  if (auto d = eilenberg::linearity_violation(e, e2, eilenberg::em_comparison_mor(f, cs))) {
    return fail(*d, {n.describe(), f.target().describe()});
  }
  if (i == 0) {
    auto one = eilenberg::em_comparison(repcat::unit_rep(cs.subgroup_group(), c.field()), cs, c.standard_ring());
    auto free = eilenberg::free_module(c.standard_ring(), repcat::unit_rep(c.group(), c.field()));
    if (auto d = expect_equal("em.comparison_of_unit", one.action.matrix(), free.action.matrix())) {
      return fail(*d, {"unit"});
    }
  }
  return std::nullopt;
}

/// The witness n -> E^-1 E n is the retraction after xi.
struct UnitWitness {
  eilenberg::Split split;
  Morphism w;
};

UnitWitness unit_witness(const Case& c, const Rep& n) {
  auto e = eilenberg::em_comparison(n, c.cosets(), c.standard_ring());
  auto split = eilenberg::em_inverse(e, c.cosets());
  auto w = compose(split.retraction, c.xi(n));
  return {std::move(split), std::move(w)};
}

Outcome em_unit_roundtrip(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& f = c.h_morphisms()[i];
  const std::vector<std::string> objs{f.source().describe(), f.target().describe()};
  auto src = unit_witness(c, f.source());
  auto dst = unit_witness(c, f.target());
  if (auto d = expect_equivariant("em.unit_witness_equivariant", src.w)) return fail(*d, objs);
  auto inv = invert(src.w);
  if (!inv) {
    return fail("em.unit_witness_invertible",
                "retraction after xi is not invertible (dim n = " + std::to_string(f.source().dim()) +
                    ", dim image = " + std::to_string(src.split.image.dim()) + ")",
                objs);
  }
  if (auto d = expect_equivariant("em.unit_witness_inverse_equivariant", *inv)) return fail(*d, objs);
  auto ef = compose(dst.split.retraction, compose(res_mor(coind_mor(f, cs), cs), src.split.inclusion));
  if (auto d = expect_equal("em.unit_witness_natural", compose(ef, src.w), compose(dst.w, f))) return fail(*d, objs);
  return std::nullopt;
}

Outcome em_counit_roundtrip(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& nm = c.modules()[i];
  const auto& m = nm.module;
  const std::vector<std::string> objs{module_name(nm)};
  auto split = eilenberg::em_inverse(m, cs);
  auto e = eilenberg::em_comparison(split.image, cs, c.standard_ring());
  if (e.carrier.dim() != m.carrier.dim()) {
    return fail("em.counit_dimension",
                "dim E(E^-1 m) = " + std::to_string(e.carrier.dim()) + " but dim m = " + std::to_string(m.carrier.dim()),
                objs);
  }
  if (auto iso = eilenberg::find_module_iso(e, m)) {
    c.note("em.counit_iso_found_by_search");
    if (auto d = eilenberg::linearity_violation(e, m, iso->forward)) return fail(*d, objs);
    if (auto d = expect_identity("em.counit_iso_left_inverse", compose(iso->inverse, iso->forward))) {
      return fail(*d, objs);
    }
    if (auto d = expect_identity("em.counit_iso_right_inverse", compose(iso->forward, iso->inverse))) {
      return fail(*d, objs);
    }
    return std::nullopt;
  }
  // The search found nothing; the canonical map m -> E E^-1 m must then be
  // an A-linear isomorphism itself.
  auto canon = compose(coind_mor(split.retraction, cs), unit_eta(m.carrier, cs));
  if (auto d = eilenberg::linearity_violation(m, e, canon)) return fail(*d, objs);
  if (!invert(canon)) {
    return fail("em.counit_iso", "no A-linear isomorphism found and the canonical map is singular", objs);
  }
  c.note("em.counit_iso_canonical_fallback");
  return std::nullopt;
}

Outcome em_extension_of_scalars(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& f = c.g_morphisms()[i];
  const Rep& y = f.source();
  const std::vector<std::string> objs{y.describe(), f.target().describe()};
  auto [t, t_inv] = eilenberg::extension_of_scalars_iso(y, cs, c.field());
  if (auto d = expect_identity("extension.inverse_after_t", compose(t_inv, t))) return fail(*d, objs);
  if (auto d = expect_identity("extension.t_after_inverse", compose(t, t_inv))) return fail(*d, objs);
  auto free = eilenberg::free_module(c.standard_ring(), y);
  auto comp = eilenberg::em_comparison(res(y, cs), cs, c.standard_ring());
  if (auto d = eilenberg::linearity_violation(free, comp, t)) return fail(*d, objs);
  auto t2 = eilenberg::extension_of_scalars_iso(f.target(), cs, c.field()).first;
  auto lhs = compose(t2, repcat::tensor_mor(Morphism::identity(c.standard_ring()->carrier), f));
  auto rhs = compose(coind_mor(res_mor(f, cs), cs), t);
  if (auto d = expect_equal("extension.naturality", lhs, rhs)) return fail(*d, objs);
  return std::nullopt;
}

Outcome em_free_adjunction(const Case& c, std::size_t i) {
  const Rep& y = c.tiny_reps()[i];
  const auto& nm = c.modules()[i];
  auto free = eilenberg::free_module(c.standard_ring(), y);
  const std::size_t a = eilenberg::module_hom_space(free, nm.module).size();
  const std::size_t b = repcat::hom_space_basis(y, nm.module.carrier).size();
  if (a != b) {
    return fail("em.free_forgetful_dimension",
                "dim Hom_A(A y, m) = " + std::to_string(a) + " but dim Hom_G(y, U m) = " + std::to_string(b),
                {y.describe(), module_name(nm)});
  }
  return std::nullopt;
}

// Coinduction as an exact functor and Ind = Coind

Outcome coind_exactness(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const auto& mors = c.h_morphisms();
  const auto& f = mors[i];
  const auto& g = next(mors, i);
  const std::vector<std::string> objs{f.source().describe(), f.target().describe(), g.target().describe()};
  const Field fld = c.field();
  const std::size_t k = cs.index();
  auto cf = coind_mor(f, cs);
  if (auto d = expect_equivariant("coind.equivariant", cf)) return fail(*d, objs);
  if (auto d = expect_identity("coind.identity", coind_mor(Morphism::identity(f.source()), cs))) return fail(*d, objs);
  if (auto d = expect_equal("coind.composition", coind_mor(compose(g, f), cs), compose(coind_mor(g, cs), cf))) {
    return fail(*d, objs);
  }
  const Matrix ker = exactlin::nullspace(f.matrix());
  const Matrix lifted = exactlin::mat_kron(Matrix::identity(k, fld), ker);
  if (auto d = expect_equal("coind.kernel_maps_to_zero", cf.matrix() * lifted,
                            Matrix(cf.matrix().rows(), lifted.cols(), fld))) {
    return fail(*d, objs);
  }
  const std::size_t nullity = cf.matrix().cols() - exactlin::rank(cf.matrix());
  if (exactlin::rank(lifted) != nullity || nullity != k * ker.cols()) {
    return fail("coind.exact_at_kernel",
                "nullity of Coind f is " + std::to_string(nullity) + ", expected " + std::to_string(k * ker.cols()),
                objs);
  }
  return std::nullopt;
}

Outcome ind_coind_triangle(const Case& c, std::size_t i) {
  const auto& cs = c.cosets();
  const std::size_t n = family(c);
  if (i < n) {
    const Rep& nn = c.h_reps()[i];
    auto lhs = compose(transfer_zeta(coind_obj(nn, cs), cs), coind_mor(c.xi(nn), cs));
    if (auto d = expect_identity("ind.zeta_Coind_after_Coind_xi", lhs)) return fail(*d, {nn.describe()});
    return std::nullopt;
  }
  const Rep& x = c.g_reps()[i - n];
  auto lhs = compose(res_mor(transfer_zeta(x, cs), cs), c.xi(res(x, cs)));
  if (auto d = expect_identity("ind.Res_zeta_after_xi_Res", lhs)) return fail(*d, {x.describe()});
  return std::nullopt;
}

// Footprints: the largest representation dimension each check builds.

std::size_t max_dim(const std::vector<Rep>& reps) {
  std::size_t d = 1;
  for (const auto& r : reps) d = std::max(d, r.dim());
  return d;
}

std::size_t k1(const Case& c) { return c.index(); }
std::size_t k2(const Case& c) { return c.index() * c.index(); }
std::size_t k3(const Case& c) { return c.index() * c.index() * c.index(); }

std::size_t small_footprint(const Case&) { return 0; }
std::size_t k1_footprint(const Case& c) { return k1(c) * std::max(max_dim(c.g_reps()), max_dim(c.h_reps())); }
std::size_t k2_footprint(const Case& c) { return k2(c) * std::max(max_dim(c.g_reps()), max_dim(c.h_reps())); }
std::size_t k3_h_footprint(const Case& c) { return k3(c) * max_dim(c.h_reps()); }
std::size_t ring_footprint(const Case& c) { return k3(c); }
std::size_t monad_footprint(const Case& c) { return k3(c) * max_dim(c.monad_reps()); }
std::size_t pi_footprint(const Case& c) {
  std::size_t d = 1;
  for (const auto& [y, x] : c.pi_pairs()) d = std::max(d, y.dim() * x.dim());
  return k2(c) * d;
}
std::size_t lambda_footprint(const Case& c) {
  const std::size_t d = max_dim(c.small_h_reps());
  return k3(c) * d * d;
}
// Module carriers have dimension at most 24.
std::size_t module_footprint(const Case& c) { return k2(c) * 24; }

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> checks = {
      {"group.axioms", "group table, subgroup closure and coset factorization", [](const Case&) { return std::size_t{3}; },
       group_axioms, small_footprint},
      {"rep.homomorphism", "family representations are homomorphisms", twice, rep_homomorphism, small_footprint},
      {"rep.tensor_strict", "strict associativity, unitality, restriction and symmetry of the tensor product", family,
       rep_tensor_strict, small_footprint},
      {"rep.hom_space", "hom space bases are equivariant and closed under composition", family, rep_hom_space,
       small_footprint},
      {"morphism.equivariance", "family morphisms commute with every group element", twice, morphism_equivariance,
       small_footprint},
      {"adjunction.triangle", "triangle identities of Res -| Coind", twice, adjunction_triangle, k2_footprint},
      {"adjunction.counit_section", "eps after xi is the identity", family, adjunction_counit_section, k1_footprint},
      {"adjunction.xi_natural", "naturality of xi", family, adjunction_xi_natural, k1_footprint},
      {"adjunction.eta_natural", "naturality of eta", family, adjunction_eta_natural, k1_footprint},
      {"adjunction.eps_natural", "naturality of eps", family, adjunction_eps_natural, k1_footprint},
      {"lax.unit_law", "unit laws of the lax monoidal structure on Coind", family, lax_unit_law, k2_footprint},
      {"lax.lambda_composite", "lambda equals its composite through the adjunction", family, lax_lambda_composite_check,
       lambda_footprint},
      {"projection.invertible", "pi has an exact two-sided inverse", family, projection_invertible, pi_footprint},
      {"projection.composite", "pi equals lambda after id (x) eta", family, projection_composite, pi_footprint},
      {"projection.rho_square", "pi matches the map on product decompositions", family, projection_rho_square,
       pi_footprint},
      {"monad_morphism.unit_triangle", "pi respects the monad units", family, monad_morphism_unit, monad_footprint},
      {"monad_morphism.mult_square", "pi respects the monad multiplications", family, monad_morphism_mult,
       monad_footprint},
      {"ring.standard.structure_constants", "standard ring against a brute-force coset oracle", single,
       ring_structure_constants, small_footprint},
      {"ring.standard.axioms", "standard ring is an equivariant unital associative ring", single, ring_standard_axioms,
       ring_footprint},
      {"ring.standard.commutative", "standard ring is commutative", single, ring_standard_commutative, k2},
      {"ring.standard.separable", "mu sigma = id and sigma is bilinear", single, ring_standard_separable,
       ring_footprint},
      {"ring.adjunction.axioms", "ring structure on Coind 1 from lambda and iota", single, ring_adjunction_axioms,
       ring_footprint},
      {"ring.canonical_iso", "standard ring is isomorphic to Coind 1 as a ring", single, ring_canonical_iso, k2},
      {"monad.adjunction.laws", "monad laws and separability of Coind Res", family, monad_adjunction_laws,
       monad_footprint},
      {"monad.ring.laws", "monad laws and separability of A (x) -", family, monad_ring_laws, monad_footprint},
      {"monad.separable_xi", "Coind Res is separable with the section built from xi", family, monad_separable_xi,
       monad_footprint},
      {"monad.iso", "A (x) - and Coind Res are isomorphic monads", family, monad_iso, monad_footprint},
      {"em.idempotent", "the idempotent defining the inverse comparison squares to itself", family,
       em_idempotent_check, module_footprint},
      {"em.comparison", "comparison modules and their functoriality", family, em_comparison_check, k3_h_footprint},
      {"em.unit_roundtrip", "E^-1 E n is isomorphic to n, naturally", family, em_unit_roundtrip, k3_h_footprint},
      {"em.counit_roundtrip", "E E^-1 m is isomorphic to m as an A-module", family, em_counit_roundtrip,
       module_footprint},
      {"em.extension_of_scalars", "E Res y is naturally isomorphic to A (x) y", family, em_extension_of_scalars,
       k2_footprint},
      {"em.free_adjunction", "free-forgetful adjunction dimension count", family, em_free_adjunction,
       module_footprint},
      {"coind.exactness", "Coind is an exact functor", family, coind_exactness, k1_footprint},
      {"ind_coind.triangle", "triangle identities for Ind -| Res with Ind = Coind", twice, ind_coind_triangle,
       k2_footprint},
  };
  return checks;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : check_registry()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

}  // namespace sepmon::verify
