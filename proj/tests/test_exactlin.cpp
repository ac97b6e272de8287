#include <doctest.h>

#include "sepmon/exactlin/linalg.hpp"

using namespace sepmon::exactlin;

namespace {

const Field Q = Field::rationals();

/// Small pseudo-random integer matrices for the algebraic laws.
Matrix sample(Field f, std::size_t r, std::size_t c, std::uint64_t seed) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      m(i, j) = Scalar::from_int(f, static_cast<std::int64_t>((seed >> 33) % 7) - 3);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("scalars stay in lowest terms") {
  auto a = Scalar::fraction(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK((a + Scalar::fraction(3, 2)).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::parse(Q, "10/4") == Scalar::fraction(5, 2));
}

TEST_CASE("rationals promote to GMP and back") {
  auto big = Scalar::from_int(Q, std::int64_t{1} << 61);
  auto sq = big * big;
  CHECK(sq.to_string() == "5316911983139663491615228241121378304");
  CHECK((sq / big) == big);
}

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  auto a = Scalar::from_int(f5, 3);
  CHECK((a + a).residue() == 1);
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::from_int(f5, -1).residue() == 4);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(a + Scalar::from_int(Q, 1), FieldMismatch);
}

TEST_CASE("field specs round trip") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("fp:7").characteristic() == 7);
  CHECK(Field::parse("fp:7").spec() == "fp:7");
  CHECK_THROWS(Field::parse("fp:x"));
  CHECK_THROWS(Field::parse("r"));
}

TEST_CASE("matrix products") {
  CHECK(Matrix::from_ints(Q, {{1, 2}, {3, 4}}) * Matrix::from_ints(Q, {{0}, {1}}) == Matrix::from_ints(Q, {{2}, {4}}));
  const Field f2 = Field::prime(2);
  CHECK(Matrix::from_ints(f2, {{1, 1}}) * Matrix::from_ints(f2, {{1}, {1}}) == Matrix::from_ints(f2, {{0}}));
  auto m = Matrix::from_ints(Q, {{5, -1}, {2, 7}});
  CHECK(Matrix::identity(2, Q) * m == m);
  CHECK_THROWS_AS(m * Matrix(3, 1, Q), DimensionMismatch);
}

TEST_CASE("associativity and distributivity on samples") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto a = sample(Q, 3, 4, s), b = sample(Q, 4, 2, s + 10), c = sample(Q, 2, 3, s + 20), d = sample(Q, 4, 2, s + 30);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + d) == a * b + a * d);
  }
}

TEST_CASE("kronecker products") {
  CHECK(mat_kron(Matrix::identity(2, Q), Matrix::identity(3, Q)) == Matrix::identity(6, Q));
  auto m = sample(Q, 2, 3, 4);
  CHECK(mat_kron(Matrix::from_ints(Q, {{2}}), m) == m.scaled(Scalar::from_int(Q, 2)));
  auto a = sample(Q, 2, 2, 1), b = sample(Q, 2, 2, 2), c = sample(Q, 2, 2, 3), d = sample(Q, 2, 2, 5);
  CHECK(mat_kron(mat_kron(a, b), c) == mat_kron(a, mat_kron(b, c)));
  CHECK(mat_kron(a, b) * mat_kron(c, d) == mat_kron(a * c, b * d));
  auto k = mat_kron(Matrix::from_ints(Q, {{1, 2}}), Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  CHECK(k == Matrix::from_ints(Q, {{0, 1, 0, 2}, {1, 0, 2, 0}}));
}

TEST_CASE("rank and column basis") {
  CHECK(rank(Matrix(3, 2, Q)) == 0);
  CHECK(rank_and_column_basis(Matrix(3, 2, Q)).basis.cols() == 0);
  CHECK(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_ints(Q, {{1, 1}, {0, 1}})) == 2);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto m = sample(Q, 4, 5, s) * sample(Q, 5, 3, s + 7);
    auto cb = rank_and_column_basis(m);
    CHECK(cb.projector_witness * cb.basis == Matrix::identity(cb.rank, Q));
    CHECK(rank(hstack(cb.basis, m)) == cb.rank);
  }
}

TEST_CASE("rank over a prime field differs from rank over Q") {
  auto m = Matrix::from_ints(Q, {{1, 1}, {1, -1}});
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix::from_ints(Field::prime(2), {{1, 1}, {1, -1}})) == 1);
}

TEST_CASE("nullspace") {
  auto m = Matrix::from_ints(Q, {{1, 2, 3}, {2, 4, 6}});
  auto n = nullspace(m);
  CHECK(n.cols() == 2);
  CHECK((m * n).is_zero());
}

TEST_CASE("linear solving") {
  auto b = sample(Q, 3, 2, 9);
  CHECK(*solve_linear(Matrix::identity(3, Q), b) == b);
  CHECK_FALSE(solve_linear(Matrix::from_ints(Q, {{1}, {2}}), Matrix::from_ints(Q, {{1}, {3}})));
  CHECK(*solve_linear(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{1}})) ==
        Matrix::from_rows(Q, {{Scalar::fraction(1, 2)}}));
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto a = sample(Q, 4, 3, s);
    auto rhs = sample(Q, 4, 1, s + 3);
    if (auto x = solve_linear(a, rhs)) {
      CHECK(a * *x == rhs);
    } else {
      CHECK(rank(hstack(a, rhs)) > rank(a));
    }
  }
}

TEST_CASE("inverses") {
  CHECK(*mat_inverse(Matrix::identity(3, Q)) == Matrix::identity(3, Q));
  CHECK(*mat_inverse(Matrix::from_ints(Q, {{1, 1}, {0, 1}})) == Matrix::from_ints(Q, {{1, -1}, {0, 1}}));
  CHECK_FALSE(mat_inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})));
  CHECK_THROWS(mat_inverse(Matrix(2, 3, Q)));
  const Field f7 = Field::prime(7);
  auto m = sample(f7, 4, 4, 11) + Matrix::identity(4, f7);
  if (auto inv = mat_inverse(m)) CHECK(m * *inv == Matrix::identity(4, f7));
}

TEST_CASE("fraction-free elimination keeps entries exact on Hilbert matrices") {
  const std::size_t n = 7;
  Matrix h(n, n, Q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Scalar::fraction(1, static_cast<std::int64_t>(i + j + 1));
  }
  auto inv = mat_inverse(h);
  REQUIRE(inv);
  CHECK(h * *inv == Matrix::identity(n, Q));
  CHECK((*inv)(0, 0) == Scalar::from_int(Q, 49));
}

TEST_CASE("first difference witnesses") {
  auto a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  auto b = Matrix::from_ints(Q, {{1, 2}, {3, 5}});
  auto d = first_difference(a, b);
  REQUIRE(d);
  CHECK(d->row == 1);
  CHECK(d->col == 1);
  CHECK_FALSE(first_difference(a, a));
}
