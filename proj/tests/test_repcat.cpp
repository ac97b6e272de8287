#include <doctest.h>

#include "sepmon/exactlin/linalg.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/repcat/homspace.hpp"
#include "sepmon/repcat/law.hpp"
#include "sepmon/repcat/tensor.hpp"

using namespace sepmon;
using namespace sepmon::repcat;
using exactlin::Matrix;

namespace {

const Field Q = Field::rationals();

GroupPtr c2() {
  static const GroupPtr g = groups::FiniteGroup::from_permutations({{1, 0}});
  return g;
}
GroupPtr s3() {
  static const GroupPtr g = groups::FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  return g;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("unit representation") {
  auto one = unit_rep(s3(), Q);
  CHECK(one.dim() == 1);
  for (Element g = 0; g < 6; ++g) CHECK(one.action(g) == Matrix::identity(1, Q));
  CHECK(tensor_obj(one, one).same_as(one));
  auto h = groups::subgroup_generated(one.group(), {1});
  CHECK(restrict(one, h).same_as(unit_rep(h.as_group(), Q)));
}

TEST_CASE("tensor products") {
  auto reg = regular_rep(c2(), Q);
  auto t = tensor_obj(reg, reg);
  CHECK(t.dim() == 4);
  CHECK(trace(t.action(0)) == Scalar::from_int(Q, 4));
  CHECK(trace(t.action(1)) == Scalar::zero(Q));
  CHECK(tensor_obj(reg, unit_rep(c2(), Q)).same_as(reg));
  auto x = random_rep(s3(), Q, 3, {2, 4});
  auto y = random_rep(s3(), Q, 4, {2, 4});
  auto z = random_rep(s3(), Q, 5, {2, 4});
  for (Element g = 0; g < 6; ++g) {
    CHECK(tensor_obj(tensor_obj(x, y), z).action(g) == tensor_obj(x, tensor_obj(y, z)).action(g));
  }
}

TEST_CASE("tensor of morphisms") {
  auto x = random_rep(s3(), Q, 11, {2, 5});
  auto y = random_rep(s3(), Q, 12, {2, 5});
  auto f = random_morphism(x, x, 1), f2 = random_morphism(x, x, 2);
  auto g = random_morphism(y, y, 3), g2 = random_morphism(y, y, 4);
  CHECK(tensor_mor(Morphism::identity(x), Morphism::identity(y)).matrix().is_identity());
  CHECK(tensor_mor(compose(f, f2), compose(g, g2)).matrix() ==
        compose(tensor_mor(f, g), tensor_mor(f2, g2)).matrix());
  CHECK(tensor_mor(f, Morphism::zero(y, y)).matrix().is_zero());
}

TEST_CASE("symmetry") {
  auto x = random_rep(s3(), Q, 21, {2, 4});
  auto y = random_rep(s3(), Q, 22, {2, 4});
  auto s = symmetry(x, y);
  CHECK(compose(symmetry(y, x), s).matrix().is_identity());
  CHECK(symmetry(unit_rep(s3(), Q), x).matrix().is_identity());
  for (Element g = 0; g < 6; ++g) {
    CHECK(s.matrix() * s.source().action(g) == s.target().action(g) * s.matrix());
  }
}

TEST_CASE("hom spaces") {
  CHECK(hom_space_basis(unit_rep(s3(), Q), unit_rep(s3(), Q)).size() == 1);
  CHECK(hom_space_basis(regular_rep(c2(), Q), regular_rep(c2(), Q)).size() == 2);
  CHECK(hom_space_basis(unit_rep(s3(), Q), regular_rep(s3(), Q)).size() == 1);
  auto x = random_rep(s3(), Q, 31);
  auto y = random_rep(s3(), Q, 32);
  auto basis = hom_space_basis(x, y);
  std::vector<Matrix> mats;
  for (const auto& b : basis) {
    CHECK_FALSE(expect_equivariant("basis", b));
    mats.push_back(b.matrix());
  }
  CHECK(express_in_basis(mats, random_morphism(x, y, 5).matrix()));
}

TEST_CASE("random representations are deterministic homomorphisms") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto x = random_rep(s3(), Field::prime(3), seed);
    CHECK(x.dim() <= 12);
    CHECK_FALSE(homomorphism_violation(x));
    CHECK(random_rep(s3(), Field::prime(3), seed).same_as(x));
  }
  CHECK(random_rep(s3(), Q, 9, {1, 1}).dim() == 1);
  CHECK(random_rep(s3(), Q, 9, {1, 6}).dim() <= 6);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto padded = random_rep(s3(), Q, seed, {2, 12, 12});
    CHECK(padded.dim() == 12);
    CHECK_FALSE(homomorphism_violation(padded));
  }
}

TEST_CASE("morphism checks") {
  auto reg = regular_rep(c2(), Q);
  auto one = unit_rep(c2(), Q);
  CHECK_THROWS_AS(Morphism(one, reg, Matrix::from_ints(Q, {{1}, {0}})), RepError);
  CHECK_NOTHROW(Morphism(one, reg, Matrix::from_ints(Q, {{1}, {1}})));
  auto v = equivariance_violation(one, reg, Matrix::from_ints(Q, {{1}, {0}}));
  REQUIRE(v);
  CHECK(v->generator == 1);
  CHECK_THROWS_AS(compose(Morphism::identity(one), Morphism::identity(reg)), RepError);
  CHECK_THROWS_AS(tensor_obj(reg, unit_rep(s3(), Q)), RepError);
}

TEST_CASE("a corrupted action is reported with its pair") {
  auto g = c2();
  auto bad = Rep::from_matrices(g, Q, 1, {Matrix::identity(1, Q), Matrix::from_ints(Q, {{2}})});
  auto v = homomorphism_violation(bad);
  REQUIRE(v);
  CHECK(v->a == 1);
  CHECK(v->b == 1);
}

TEST_CASE("isomorphism search") {
  auto x = random_rep(s3(), Q, 41);
  auto iso = find_iso(x, x);
  REQUIRE(iso);
  CHECK(compose(iso->inverse, iso->forward).matrix().is_identity());
  CHECK_FALSE(find_iso(unit_rep(s3(), Q), regular_rep(s3(), Q)));
  const Field f2 = Field::prime(2);
  auto p = coset_permutation_rep(s3(), groups::subgroup_generated(s3(), {1}), f2);
  auto piso = find_iso(p, p);
  REQUIRE(piso);
  CHECK(compose(piso->forward, piso->inverse).matrix().is_identity());
}

TEST_CASE("restriction") {
  auto g = s3();
  auto x = random_rep(g, Q, 51);
  auto y = random_rep(g, Q, 52);
  auto whole = groups::subgroup_generated(g, g->generators());
  auto rx = restrict(x, whole);
  CHECK(rx.dim() == x.dim());
  for (Element e = 0; e < 6; ++e) CHECK(rx.action(e) == x.action(e));
  auto h = groups::subgroup_generated(g, {1});
  CHECK(restrict(tensor_obj(x, y), h).same_as(tensor_obj(restrict(x, h), restrict(y, h))));
}
