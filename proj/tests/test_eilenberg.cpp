#include <doctest.h>

#include "fixtures.hpp"
#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/eilenberg/modules.hpp"
#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/monadring/monad.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/tensor.hpp"

using namespace sepmon;
using namespace sepmon::eilenberg;
using exactlin::Scalar;
using repcat::compose;
using repcat::random_morphism;
using repcat::random_rep;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

RingPtr ring(const CosetSpace& cs, Field f) {
  return std::make_shared<const RingObject>(monadring::standard_ring(cs, f));
}

}  // namespace

TEST_CASE("free modules") {
  const auto& cs = fixtures::s3_transposition();
  auto a = ring(cs, Q);
  auto m = free_module(a, repcat::unit_rep(cs.group(), Q));
  CHECK(m.carrier.same_as(a->carrier));
  CHECK(m.action.matrix() == a->mul.matrix());
  auto y = random_rep(cs.group(), Q, 1, {2, 4});
  auto fy = free_module(a, y);
  CHECK(fy.carrier.dim() == 3 * y.dim());
  CHECK_FALSE(module_axiom_violation(fy));
}

TEST_CASE("comparison modules") {
  const auto& cs = fixtures::s3_transposition();
  auto a = ring(cs, Q);
  auto one = em_comparison(repcat::unit_rep(cs.subgroup_group(), Q), cs, a);
  CHECK(one.action.matrix() == a->mul.matrix());
  auto h = cs.subgroup_group();
  auto n = random_rep(h, Q, 2, {2, 4}), n2 = random_rep(h, Q, 3, {2, 4});
  auto e = em_comparison(n, cs, a);
  CHECK_FALSE(module_axiom_violation(e));
  CHECK(e.action.matrix() == em_action_via_lambda(n, cs, Q).matrix());
  CHECK(e.action.matrix() == em_action_via_pi(n, cs, Q).matrix());
  auto f = random_morphism(n, n2, 4);
  CHECK_FALSE(linearity_violation(e, em_comparison(n2, cs, a), em_comparison_mor(f, cs)));
  const auto& whole = fixtures::s3_whole();
  auto w = random_rep(whole.subgroup_group(), Q, 5, {2, 4});
  auto ew = em_comparison(w, whole, ring(whole, Q));
  CHECK(ew.carrier.dim() == w.dim());
  CHECK(ew.action.matrix().is_identity());
}

TEST_CASE("splitting idempotents") {
  auto x = random_rep(fixtures::s3(), Q, 6, {2, 6});
  auto s = split_idempotent(Morphism::identity(x));
  CHECK(s.image.dim() == x.dim());
  CHECK(split_idempotent(Morphism::zero(x, x)).image.dim() == 0);
  auto reg = repcat::regular_rep(fixtures::s3(), Q);
  // The averaging idempotent on the regular representation has rank 1.
  Matrix avg(6, 6, Q);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) avg(i, j) = Scalar::fraction(1, 6);
  }
  auto e = Morphism(reg, reg, avg);
  auto se = split_idempotent(e);
  CHECK(se.image.dim() == exactlin::rank(avg));
  CHECK(compose(se.inclusion, se.retraction).matrix() == avg);
  CHECK(compose(se.retraction, se.inclusion).matrix().is_identity());
  CHECK_THROWS(split_idempotent(Morphism(reg, reg, avg.scaled(Scalar::from_int(Q, 2)))));
}

TEST_CASE("the inverse comparison") {
  for (const auto* cs : {&fixtures::s3_transposition(), &fixtures::s3_alternating(), &fixtures::c4_half()}) {
    for (Field f : {Q, F3, Field::prime(2)}) {
      auto a = ring(*cs, f);
      auto free_one = free_module(a, repcat::unit_rep(cs->group(), f));
      auto e = em_idempotent(free_one, *cs);
      CHECK(compose(e, e).matrix() == e.matrix());
      CHECK(em_inverse(free_one, *cs).image.dim() == 1);
      auto n = random_rep(cs->subgroup_group(), f, 7, {2, 4});
      auto back = em_inverse(em_comparison(n, *cs, a), *cs);
      CHECK(repcat::find_iso(back.image, n));
    }
  }
  const auto& whole = fixtures::s3_whole();
  auto w = random_rep(whole.group(), Q, 8, {2, 4});
  auto m = em_comparison(adjunction::res(w, whole), whole, ring(whole, Q));
  CHECK(em_inverse(m, whole).image.dim() == w.dim());
}

TEST_CASE("module hom spaces") {
  const auto& cs = fixtures::s3_transposition();
  auto a = ring(cs, Q);
  auto x = random_rep(cs.group(), Q, 9, {2, 3});
  auto y = random_rep(cs.group(), Q, 10, {2, 3});
  auto fx = free_module(a, x), fy = free_module(a, y);
  // Hom_A(A x, A y) = Hom_G(x, A y) = Hom_H(Res x, Res y).
  const std::size_t d = module_hom_space(fx, fy).size();
  CHECK(d == repcat::hom_space_basis(x, fy.carrier).size());
  CHECK(d == repcat::hom_space_basis(adjunction::res(x, cs), adjunction::res(y, cs)).size());
  auto one = repcat::unit_rep(cs.group(), Q);
  CHECK(module_hom_space(free_module(a, one), free_module(a, one)).size() == 1);
  auto basis = module_hom_space(fx, fx);
  std::vector<Matrix> mats;
  for (const auto& b : basis) mats.push_back(b.matrix());
  CHECK(repcat::express_in_basis(mats, Matrix::identity(fx.carrier.dim(), Q)));
  REQUIRE(basis.size() >= 2);
  auto comp = compose(basis[0], basis[1]);
  CHECK_FALSE(linearity_violation(fx, fx, comp));
  CHECK_THROWS(module_hom_space(fx, free_module(ring(cs, Q), x)));
}

TEST_CASE("module isomorphisms") {
  const auto& cs = fixtures::s3_transposition();
  auto a = ring(cs, F3);
  auto y = random_rep(cs.group(), F3, 11, {2, 3});
  auto m = free_module(a, y);
  auto iso = find_module_iso(m, m);
  REQUIRE(iso);
  CHECK(compose(iso->inverse, iso->forward).matrix().is_identity());
  auto n = repcat::unit_rep(cs.subgroup_group(), F3);
  CHECK_FALSE(find_module_iso(em_comparison(n, cs, a), free_module(a, y)));
  auto split = em_inverse(m, cs);
  CHECK(find_module_iso(em_comparison(split.image, cs, a), m));
}

TEST_CASE("idempotent summands of free modules") {
  const auto& cs = fixtures::s3_alternating();
  auto a = ring(cs, Q);
  auto m = free_module(a, repcat::regular_rep(cs.group(), Q));
  auto e = find_module_idempotent(m, 1);
  REQUIRE(e);
  CHECK(compose(*e, *e).matrix() == e->matrix());
  CHECK_FALSE(linearity_violation(m, m, *e));
  auto part = split_module(m, *e);
  CHECK(part.carrier.dim() > 0);
  CHECK(part.carrier.dim() < m.carrier.dim());
  CHECK_FALSE(module_axiom_violation(part));
  auto back = em_inverse(part, cs);
  CHECK(find_module_iso(em_comparison(back.image, cs, a), part));
}

TEST_CASE("extension of scalars matches restriction") {
  for (const auto* cs : {&fixtures::s3_transposition(), &fixtures::c4_half()}) {
    for (Field f : {Q, Field::prime(2)}) {
      auto a = ring(*cs, f);
      auto y = random_rep(cs->group(), f, 12, {2, 4});
      auto [t, t_inv] = extension_of_scalars_iso(y, *cs, f);
      CHECK(compose(t_inv, t).matrix().is_identity());
      CHECK_FALSE(linearity_violation(free_module(a, y), em_comparison(adjunction::res(y, *cs), *cs, a), t));
    }
  }
}
