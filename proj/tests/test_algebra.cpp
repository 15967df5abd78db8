#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

namespace {

// Direct evaluation of (x·y)·z − x·(y·z + z·y) on every basis triple.
bool zinbiel_by_hand(const Algebra& a) {
  const Index n = a.dim;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index out = 0; out < n; ++out) {
          Rational lhs = 0, rhs = 0;
          for (Index s = 0; s < n; ++s) {
            lhs += a.mult(i, j, s) * a.mult(s, k, out);
            rhs += (a.mult(j, k, s) + a.mult(k, j, s)) * a.mult(i, s, out);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

Matrix rows(Index n, std::initializer_list<std::initializer_list<int>> data) {
  Matrix m(static_cast<Index>(data.size()), n);
  Index i = 0;
  for (const auto& r : data) {
    Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("the catalogued algebras are Zinbiel") {
  for (const Algebra& a : {algebra_A1(), algebra_A2(), algebra_A3(), algebra_A4(), algebra_A5(1), algebra_A5(2),
                           algebra_A5(-1), algebra_A5(Rational(-7, 3)), algebra_A6()}) {
    CHECK(is_zinbiel(a).passed());
    CHECK(zinbiel_by_hand(a));
  }
  CHECK(is_zinbiel(Algebra::null(4)).passed());
  CHECK(is_zinbiel(Algebra::null(0)).passed());
}

TEST_CASE("e·e = e is not Zinbiel") {
  Algebra a(1);
  a.set(0, 0, 0, 1);
  const CheckReport r = is_zinbiel(a);
  REQUIRE_FALSE(r.passed());
  const Witness& w = *r.results[0].witness;
  CHECK(w.basis_tuple == std::vector<Index>{0, 0, 0});
  CHECK(w.lhs(0) == 1);
  CHECK(w.rhs(0) == 2);
}

TEST_CASE("is_zinbiel agrees with a hand evaluation on random algebras") {
  Rng rng(5);
  int passing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 3;
    const Algebra a = trial % 2 ? random_zinbiel_of_dim(rng, n) : Algebra(n, random_sparse_tensor(rng, n, n, n, 0.15));
    const bool ok = is_zinbiel(a).passed();
    passing += ok;
    CHECK(ok == zinbiel_by_hand(a));
  }
  CHECK(passing > 50);
}

TEST_CASE("subalgebras and ideals") {
  CHECK(subspace_check(algebra_A6(), rows(3, {{0, 1, 0}, {0, 0, 1}}), SubspaceMode::Subalgebra));
  CHECK(subspace_check(algebra_A1(), rows(3, {{0, 0, 1}}), SubspaceMode::Ideal));
  CHECK(subspace_check(algebra_A4(), Matrix::Identity(3, 3), SubspaceMode::Ideal));
  CHECK_FALSE(subspace_check(algebra_A1(), rows(3, {{1, 0, 0}}), SubspaceMode::Subalgebra));
  // span{e1} in A4 is a subalgebra but e2·e1 = e3 leaves it.
  CHECK(subspace_check(algebra_A4(), rows(3, {{1, 0, 0}}), SubspaceMode::Subalgebra));
  CHECK_FALSE(subspace_check(algebra_A4(), rows(3, {{1, 0, 0}}), SubspaceMode::Ideal));
  CHECK_THROWS_AS(subspace_check(algebra_A1(), rows(3, {{1, 0, 0}, {2, 0, 0}}), SubspaceMode::Ideal), PreconditionError);
}

TEST_CASE("homomorphisms") {
  const Algebra a1 = algebra_A1();
  CHECK(is_homomorphism(a1, a1, Matrix::Identity(3, 3)).passed());
  CHECK(is_homomorphism(a1, algebra_A6(), Matrix::Zero(3, 3)).passed());
  const Matrix swap = rows(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const CheckReport r = is_homomorphism(a1, a1, swap);
  REQUIRE_FALSE(r.passed());
  CHECK(r.results[0].witness->basis_tuple == std::vector<Index>{0, 0});
  CHECK_THROWS_AS(is_homomorphism(a1, a1, Matrix::Identity(2, 3)), ShapeError);
}

TEST_CASE("change of basis") {
  const Algebra a1 = algebra_A1();
  CHECK(change_of_basis(a1, Matrix::Identity(3, 3)) == a1);

  Matrix p = Matrix::Identity(3, 3);
  p(0, 0) = 2;
  const Algebra scaled = change_of_basis(a1, p);
  CHECK(scaled.mult(0, 0, 2) == 4);

  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Algebra a = random_zinbiel_of_dim(rng, 3);
    const Matrix q = random_invertible(rng, 3);
    const Algebra b = change_of_basis(a, q);
    CHECK(change_of_basis(b, inverse(q)) == a);
    CHECK(is_homomorphism(b, a, q).passed());
    CHECK(is_zinbiel(b).passed());
  }
}

TEST_CASE("restriction to a subalgebra") {
  const Algebra a6 = algebra_A6();
  Matrix cols = Matrix::Zero(3, 2);
  cols(1, 0) = 1;
  cols(2, 1) = 1;
  CHECK(restrict_to(a6, cols) == Algebra::null(2));
  Matrix e1 = Matrix::Zero(3, 1);
  e1(0, 0) = 1;
  CHECK_THROWS_AS(restrict_to(a6, e1), PreconditionError);
}
