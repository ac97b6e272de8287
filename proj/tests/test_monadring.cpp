#include <doctest.h>

#include "fixtures.hpp"
#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/monadring/monad.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/tensor.hpp"

using namespace sepmon;
using namespace sepmon::monadring;
using exactlin::Scalar;
using repcat::compose;
using repcat::random_rep;

namespace {

const Field Q = Field::rationals();

std::vector<const CosetSpace*> spaces() {
  return {&fixtures::s3_transposition(), &fixtures::s3_alternating(), &fixtures::c4_half(), &fixtures::s3_whole()};
}

}  // namespace

TEST_CASE("standard ring structure constants") {
  const auto& cs = fixtures::s3_transposition();
  auto a = standard_ring(cs, Q);
  CHECK(a.carrier.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(a.mul.matrix()(k, i * 3 + j) == (i == j && j == k ? Scalar::one(Q) : Scalar::zero(Q)));
      }
    }
  }
  CHECK(standard_ring(fixtures::s3_alternating(), Q).carrier.dim() == 2);
  auto unit_ring = standard_ring(fixtures::s3_whole(), Q);
  CHECK(unit_ring.carrier.dim() == 1);
  CHECK(unit_ring.mul.matrix() == Matrix::identity(1, Q));
}

TEST_CASE("standard ring axioms hold in every characteristic") {
  for (const auto* cs : spaces()) {
    for (Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
      auto a = standard_ring(*cs, f);
      CHECK_FALSE(ring_axiom_violation(a));
      CHECK_FALSE(commutativity_violation(a));
      CHECK_FALSE(separability_violation(a));
      CHECK_FALSE(structure_equivariance_violation(a));
    }
  }
}

TEST_CASE("a corrupted structure constant breaks separability") {
  auto a = standard_ring(fixtures::s3_transposition(), Field::prime(3));
  Matrix m = a.mul.matrix();
  m(0, 0) = Scalar::zero(m.field());
  a.mul = Morphism::unchecked(a.mul.source(), a.mul.target(), m);
  CHECK(separability_violation(a));
  CHECK_THROWS_AS(monad_from_ring(a), repcat::RepError);
}

TEST_CASE("ring from the adjunction and the canonical isomorphism") {
  for (const auto* cs : spaces()) {
    auto adj = ring_from_adjunction(*cs, Q);
    CHECK(adj.carrier.dim() == cs->index());
    CHECK_FALSE(ring_axiom_violation(adj));
    CHECK_FALSE(commutativity_violation(adj));
    auto std_ring = standard_ring(*cs, Q);
    auto [c, c_inv] = canonical_ring_iso(*cs, Q);
    CHECK(compose(c_inv, c).matrix().is_identity());
    auto moved = transport(std_ring, c, c_inv);
    CHECK(moved.mul.matrix() == adj.mul.matrix());
    CHECK(moved.unit.matrix() == adj.unit.matrix());
    CHECK_FALSE(separability_violation(moved));
  }
  CHECK(canonical_ring_iso(fixtures::s3_whole(), Q).first.matrix() == Matrix::identity(1, Q));
}

TEST_CASE("monad from the adjunction") {
  const auto& cs = fixtures::s3_transposition();
  auto t = monad_from_adjunction(cs);
  for (std::uint64_t s = 1; s <= 4; ++s) {
    auto x = random_rep(cs.group(), Q, s, {2, 4});
    CHECK(t.on_obj(x).dim() == 3 * x.dim());
    CHECK_FALSE(monad_law_violation(t, x));
    CHECK_FALSE(monad_separability_violation(t, x));
  }
  auto id = monad_from_adjunction(fixtures::s3_whole());
  auto x = random_rep(fixtures::s3(), Q, 9, {2, 4});
  CHECK(id.on_obj(x).same_as(x));
  CHECK(id.mu_at(x).matrix().is_identity());
}

TEST_CASE("monad from a ring") {
  for (const auto* cs : spaces()) {
    auto t = monad_from_ring(standard_ring(*cs, Field::prime(2)));
    auto x = random_rep(cs->group(), Field::prime(2), 3, {2, 4});
    CHECK_FALSE(monad_law_violation(t, x));
    CHECK_FALSE(monad_separability_violation(t, x));
  }
  auto one = monad_from_ring(standard_ring(fixtures::s3_whole(), Q));
  auto x = random_rep(fixtures::s3(), Q, 4, {2, 4});
  CHECK(one.on_obj(x).same_as(x));
  CHECK(one.eta_at(x).matrix().is_identity());
}

TEST_CASE("pi is a monad morphism and an isomorphism") {
  for (const auto* cs : spaces()) {
    for (Field f : {Q, Field::prime(3)}) {
      auto x = random_rep(cs->group(), f, 5, {2, 3});
      for (const auto& phi : {pi_as_monad_morphism(*cs, f), standard_pi_monad_morphism(*cs, f)}) {
        CHECK_FALSE(monad_morphism_unit_violation(phi, x));
        CHECK_FALSE(monad_morphism_mult_violation(phi, x));
        CHECK(exactlin::mat_inverse(phi.at(x).matrix()));
      }
    }
  }
  auto phi = pi_as_monad_morphism(fixtures::s3_whole(), Q);
  CHECK(phi.at(random_rep(fixtures::s3(), Q, 6, {2, 3})).matrix().is_identity());
}
