#include <doctest.h>

#include "fixtures.hpp"
#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/law.hpp"
#include "sepmon/repcat/tensor.hpp"

using namespace sepmon;
using namespace sepmon::adjunction;
using exactlin::Scalar;
using repcat::compose;
using repcat::random_morphism;
using repcat::random_rep;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

Matrix ones(std::size_t n, Field f) {
  Matrix m(n, 1, f);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = Scalar::one(f);
  return m;
}

}  // namespace

TEST_CASE("coinduction objects") {
  const auto& cs = fixtures::s3_transposition();
  auto one_h = repcat::unit_rep(cs.subgroup_group(), Q);
  auto c = coind_obj(one_h, cs);
  CHECK(c.dim() == 3);
  auto perm = repcat::coset_permutation_rep(cs.group(), cs.subgroup(), Q);
  CHECK(repcat::find_iso(c, perm));
  CHECK_FALSE(repcat::homomorphism_violation(c));
  for (std::uint64_t s = 1; s <= 4; ++s) {
    auto n = random_rep(cs.subgroup_group(), F3, s);
    CHECK(coind_obj(n, cs).dim() == 3 * n.dim());
    CHECK_FALSE(repcat::homomorphism_violation(coind_obj(n, cs)));
  }
  const auto& whole = fixtures::s3_whole();
  auto x = random_rep(whole.subgroup_group(), Q, 7);
  auto cx = coind_obj(x, whole);
  for (groups::Element g = 0; g < 6; ++g) CHECK(cx.action(g) == x.action(g));
}

TEST_CASE("coinduction of morphisms") {
  const auto& cs = fixtures::s3_transposition();
  auto h = cs.subgroup_group();
  auto x = random_rep(h, Q, 1), y = random_rep(h, Q, 2), z = random_rep(h, Q, 3);
  auto f = random_morphism(x, y, 4), g = random_morphism(y, z, 5);
  CHECK(coind_mor(Morphism::identity(x), cs).matrix().is_identity());
  CHECK(coind_mor(compose(g, f), cs).matrix() == compose(coind_mor(g, cs), coind_mor(f, cs)).matrix());
  CHECK(coind_mor(Morphism::zero(x, y), cs).matrix().is_zero());
}

TEST_CASE("unit and counit") {
  const auto& cs = fixtures::s3_transposition();
  auto one = repcat::unit_rep(cs.group(), Q);
  CHECK(unit_eta(one, cs).matrix() == ones(3, Q));
  CHECK(lax_iota(cs, Q).matrix() == ones(3, Q));
  const auto& whole = fixtures::s3_whole();
  auto m = random_rep(whole.group(), Q, 11);
  CHECK(unit_eta(m, whole).matrix().is_identity());
  CHECK(counit_eps(res(m, whole), whole).matrix().is_identity());
  CHECK(section_xi(res(m, whole), whole).matrix().is_identity());
  CHECK(lax_iota(whole, Q).matrix() == Matrix::identity(1, Q));
}

TEST_CASE("triangle identities and the section") {
  for (const auto* cs : {&fixtures::s3_transposition(), &fixtures::s3_alternating(), &fixtures::c4_half()}) {
    for (Field f : {Q, Field::prime(2), F3}) {
      auto m = random_rep(cs->group(), f, 21);
      auto n = random_rep(cs->subgroup_group(), f, 22);
      CHECK(compose(counit_eps(res(m, *cs), *cs), res_mor(unit_eta(m, *cs), *cs)).matrix().is_identity());
      CHECK(compose(coind_mor(counit_eps(n, *cs), *cs), unit_eta(coind_obj(n, *cs), *cs)).matrix().is_identity());
      CHECK(compose(counit_eps(n, *cs), section_xi(n, *cs)).matrix().is_identity());
      CHECK_FALSE(repcat::expect_equivariant("xi", section_xi(n, *cs)));
    }
  }
}

TEST_CASE("naturality of eta, eps and xi") {
  const auto& cs = fixtures::s3_transposition();
  auto x = random_rep(cs.group(), Q, 31), y = random_rep(cs.group(), Q, 32);
  auto f = random_morphism(x, y, 33);
  CHECK(compose(coind_mor(res_mor(f, cs), cs), unit_eta(x, cs)).matrix() == compose(unit_eta(y, cs), f).matrix());
  auto n = random_rep(cs.subgroup_group(), Q, 34), n2 = random_rep(cs.subgroup_group(), Q, 35);
  auto g = random_morphism(n, n2, 36);
  CHECK(compose(g, counit_eps(n, cs)).matrix() ==
        compose(counit_eps(n2, cs), res_mor(coind_mor(g, cs), cs)).matrix());
  CHECK(compose(res_mor(coind_mor(g, cs), cs), section_xi(n, cs)).matrix() == compose(section_xi(n2, cs), g).matrix());
}

TEST_CASE("lax structure") {
  const auto& cs = fixtures::s3_transposition();
  auto h = cs.subgroup_group();
  auto one_h = repcat::unit_rep(h, Q);
  auto n = random_rep(h, Q, 41, {2, 4});
  auto id = Morphism::identity(coind_obj(n, cs));
  CHECK(compose(lax_lambda(one_h, n, cs), repcat::tensor_mor(lax_iota(cs, Q), id)).matrix().is_identity());
  auto x = random_rep(h, Q, 42, {2, 3}), y = random_rep(h, Q, 43, {2, 3});
  CHECK(lax_lambda(x, y, cs).matrix() == lax_lambda_composite(x, y, cs).matrix());
  const auto& whole = fixtures::s3_whole();
  auto w = random_rep(whole.subgroup_group(), Q, 44, {2, 3});
  CHECK(lax_lambda(w, w, whole).matrix().is_identity());
}

TEST_CASE("projection formula") {
  const auto& cs = fixtures::s3_transposition();
  auto one_h = repcat::unit_rep(cs.subgroup_group(), Q);
  auto one_g = repcat::unit_rep(cs.group(), Q);
  CHECK(exactlin::rank(projection_pi(one_h, one_g, cs).matrix()) == 3);
  for (Field f : {Q, F3}) {
    auto y = random_rep(cs.subgroup_group(), f, 51, {2, 6});
    auto x = random_rep(cs.group(), f, 52, {2, 6});
    auto pi = projection_pi(y, x, cs);
    auto inv = projection_pi_inverse(y, x, cs);
    CHECK(compose(inv, pi).matrix().is_identity());
    CHECK(compose(pi, inv).matrix().is_identity());
    CHECK(pi.matrix() == projection_pi_composite(y, x, cs).matrix());
    auto lhs = rho_product_iso(repcat::tensor_obj(y, res(x, cs)), cs) * pi.matrix();
    auto rhs = product_side_projection(y, x, cs) *
               exactlin::mat_kron(rho_product_iso(y, cs), Matrix::identity(x.dim(), f));
    CHECK(lhs == rhs);
  }
  const auto& whole = fixtures::s3_whole();
  auto y = random_rep(whole.subgroup_group(), Q, 53, {2, 3});
  auto x = random_rep(whole.group(), Q, 54, {2, 3});
  CHECK(projection_pi(y, x, whole).matrix().is_identity());
  CHECK(rho_product_iso(y, whole).is_identity());
}

TEST_CASE("coinduction is exact") {
  const auto& cs = fixtures::s3_transposition();
  auto h = cs.subgroup_group();
  auto x = random_rep(h, F3, 61), y = random_rep(h, F3, 62);
  auto f = random_morphism(x, y, 63);
  CHECK(exactlin::rank(coind_mor(f, cs).matrix()) == 3 * exactlin::rank(f.matrix()));
}

TEST_CASE("Ind = Coind triangle identities") {
  const auto& cs = fixtures::s3_alternating();
  auto n = random_rep(cs.subgroup_group(), Q, 71);
  auto x = random_rep(cs.group(), Q, 72);
  CHECK(compose(transfer_zeta(coind_obj(n, cs), cs), coind_mor(section_xi(n, cs), cs)).matrix().is_identity());
  CHECK(compose(res_mor(transfer_zeta(x, cs), cs), section_xi(res(x, cs), cs)).matrix().is_identity());
}
