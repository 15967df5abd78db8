#include <doctest.h>

#include "zinbiel/exactlin.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

namespace {

Matrix mat(Index r, Index c, std::initializer_list<Rational> v) {
  Matrix m(r, c);
  auto it = v.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

Matrix elementary(Index n, Index i, Index j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1;
  return m;
}

Matrix as_matrix_columns(const std::vector<Vector>& vs) {
  Matrix m(vs.front().size(), static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Index>(k)) = vs[k];
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("nullspace of small matrices") {
  CHECK(nullspace(Matrix::Identity(2, 2)).empty());

  const auto k = nullspace(mat(2, 2, {1, 2, 2, 4}));
  REQUIRE(k.size() == 1);
  // Proportional to (−2, 1).
  CHECK(k[0](0) == -2 * k[0](1));
  CHECK(k[0](1) != 0);

  const auto z = nullspace(Matrix::Zero(3, 3));
  CHECK(z.size() == 3);
  CHECK(rank(as_matrix_columns(z)) == 3);
}

TEST_CASE("nullspace vectors are annihilated and independent") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = random_sparse_matrix(rng, 3, 5, 0.4);
    const auto basis = nullspace(m);
    CHECK(static_cast<Index>(basis.size()) + rank(m) == 5);
    for (const auto& v : basis) CHECK(is_zero(Matrix(m * v)));
    if (!basis.empty()) CHECK(rank(as_matrix_columns(basis)) == static_cast<Index>(basis.size()));
  }
}

TEST_CASE("inverse of random invertible matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix p = random_invertible(rng, 3);
    CHECK(Matrix(p * inverse(p)) == Matrix::Identity(3, 3));
  }
  CHECK_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), SingularMatrixError);
  CHECK_THROWS_AS(inverse(Matrix(Matrix::Zero(2, 3))), ShapeError);
}

TEST_CASE("coordinates in a column basis") {
  const Matrix cols = mat(3, 2, {1, 0, 1, 1, 0, 1});
  Vector v(3);
  v << 2, 5, 3;
  const auto c = coordinates_in(cols, v);
  REQUIRE(c);
  CHECK(Vector(cols * *c) == v);
  v(2) = 4;
  CHECK_FALSE(coordinates_in(cols, v));
}

TEST_CASE("tensor application and change of coordinates") {
  Tensor t(2, 2, 2);
  t(0, 1, 0) = 3;
  t(1, 1, 1) = Rational(1, 2);
  Vector x(2), y(2);
  x << 1, 2;
  y << 0, 4;
  Vector expected(2);
  expected << 12, 4;  // x1·y2·3 e1 + x2·y2·½ e2
  CHECK(t(x, y) == expected);

  const Matrix id = Matrix::Identity(2, 2);
  CHECK(transform(t, id, id, id) == t);
}

TEST_CASE("square-is-zero expansion") {
  const std::vector<Matrix> zero{Matrix::Zero(2, 2)};
  CHECK(poly_expand_quadratic(zero, QuadraticConstraint::SquareIsZero).empty());

  const std::vector<Matrix> upper{elementary(2, 0, 1)};
  CHECK(poly_expand_quadratic(upper, QuadraticConstraint::SquareIsZero).empty());

  // (t1·E12 + t2·E21)² = t1·t2·I, expanded by hand.
  const std::vector<Matrix> swap{elementary(2, 0, 1), elementary(2, 1, 0)};
  const auto residuals = poly_expand_quadratic(swap, QuadraticConstraint::SquareIsZero);
  const auto vars = indexed_names("t", 2);
  REQUIRE(residuals.size() == 1);
  CHECK(residuals[0] == Poly::variable(vars, 0) * Poly::variable(vars, 1));
  CHECK(to_string(residuals[0]) == "t1*t2");
}

TEST_CASE("quadratic expansion agrees with direct evaluation") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Matrix> family{random_sparse_matrix(rng, 3, 3, 0.3), random_sparse_matrix(rng, 3, 3, 0.3),
                                     random_sparse_matrix(rng, 3, 3, 0.3)};
    const auto residuals = poly_expand_quadratic(family, QuadraticConstraint::SquareIsZero);
    for (int p = 0; p < 5; ++p) {
      std::vector<Rational> t{random_nonzero_rational(rng), random_nonzero_rational(rng), Rational(p)};
      Matrix m = Matrix::Zero(3, 3);
      for (std::size_t i = 0; i < 3; ++i) m += t[i] * family[i];
      bool all_vanish = true;
      for (const auto& r : residuals) all_vanish = all_vanish && r.evaluate(t) == 0;
      CHECK(all_vanish == is_zero(Matrix(m * m)));
    }
  }
}

TEST_CASE("polynomial normalization and printing") {
  const auto vars = indexed_names("mu", 3);
  const Poly mu1 = Poly::variable(vars, 0), mu3 = Poly::variable(vars, 2);
  const Poly p = Rational(-1, 2) * (mu1 * mu1) + mu3;
  CHECK(to_string(normalized(p)) == "mu1^2 - 2*mu3");
  CHECK(canonical_polynomial_set({p, Rational(2) * p, Poly(vars)}).size() == 1);
  const std::vector<Rational> at{2, 0, 2};
  CHECK(p.evaluate(at) == 0);
}
