#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/products.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

namespace {

ExtendingDatum a6_datum() { return extract_datum(coordinate_presentation(algebra_A6(), {1, 2})); }

Matrix column(std::initializer_list<Rational> v) {
  Matrix m(static_cast<Index>(v.size()), 1);
  Index i = 0;
  for (const auto& x : v) m(i++, 0) = x;
  return m;
}

Matrix one(const Rational& q) {
  Matrix m(1, 1);
  m(0, 0) = q;
  return m;
}

}  // namespace

TEST_CASE("the zero datum passes every condition") {
  const CheckReport r = verify_datum(ExtendingDatum::trivial(algebra_A1(), 2));
  CHECK(r.passed());
  CHECK(r.results.size() == 15);
  CHECK(r.results.front().label == "Zinbiel(Z)");
  CHECK(r.find("Z12"));
  CHECK(r.find("Z1(iii)"));
}

TEST_CASE("the trivial datum builds a direct sum with a null algebra") {
  const Algebra u = build_unified(ExtendingDatum::trivial(algebra_A1(), 1));
  Algebra expected(4);
  expected.set(0, 0, 2, 1);
  CHECK(u == expected);
}

TEST_CASE("extracting A6 along span{e2,e3}") {
  const ExtendingDatum d = a6_datum();
  CHECK(d.base == Algebra::null(2));
  // Z coordinates: e2 ↦ 1, e3 ↦ 2. V is spanned by e1.
  Tensor omega(1, 1, 2), projR(1, 2, 2), projL(2, 1, 2);
  omega(0, 0, 0) = 1;
  projR(0, 0, 1) = Rational(1, 2);
  projL(0, 0, 1) = 1;
  CHECK(d.omega == omega);
  CHECK(d.projR == projR);
  CHECK(d.projL == projL);
  CHECK(d.actL.is_zero());
  CHECK(d.actR.is_zero());
  CHECK(d.star.is_zero());
  CHECK(verify_datum(d).passed());

  const InclusionPresentation p = coordinate_presentation(algebra_A6(), {1, 2});
  const Algebra u = build_unified(d);
  const Matrix phi = presentation_map(p);
  CHECK(is_homomorphism(u, p.total, phi).passed());
  CHECK(is_invertible(phi));
}

TEST_CASE("extraction from a direct sum gives the trivial datum") {
  const Algebra e = build_unified(ExtendingDatum::trivial(algebra_A4(), 1));
  CHECK(extract_datum(coordinate_presentation(e, {0, 1, 2})) == ExtendingDatum::trivial(algebra_A4(), 1));
}

TEST_CASE("extraction rejects subspaces that are not subalgebras") {
  CHECK_THROWS_AS(extract_datum(coordinate_presentation(algebra_A1(), {0})), PreconditionError);
}

TEST_CASE("a single cocycle on A1 breaks Z4") {
  ExtendingDatum d = ExtendingDatum::trivial(algebra_A1(), 1);
  d.omega(0, 0, 0) = 1;
  const CheckReport r = verify_datum(d);
  const ConditionResult* z4 = r.find("Z4");
  REQUIRE(z4);
  CHECK_FALSE(z4->passed);
  CHECK(z4->witness->basis_tuple[0] == 0);
  CHECK_THROWS_AS(build_unified(d), PreconditionError);
  CHECK_NOTHROW(build_unified(d, true));
}

TEST_CASE("the datum conditions hold exactly when the unified product is Zinbiel") {
  Rng rng(23);
  int passing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const ExtendingDatum d = random_datum(rng, 1 + trial % 3, 1 + (trial / 3) % 2);
    const bool conditions = verify_datum(d).passed();
    passing += conditions;
    CHECK(conditions == is_zinbiel(build_unified(d, true)).passed());
  }
  CHECK(passing > 20);
  CHECK(passing < 280);
}

TEST_CASE("unified product formula on sample elements") {
  ExtendingDatum d = ExtendingDatum::trivial(algebra_A1(), 1);
  d.actL(0, 0, 0) = 2;  // u◁e1 = 2u
  d.projR(0, 1, 0) = 3; // u⊳e2 = 3e1
  d.star(0, 0, 0) = 5;  // u∗u = 5u
  Vector a(4), b(4);
  a << 1, 0, 0, 1;  // e1 + u
  b << 1, 1, 0, 2;  // e1 + e2 + 2u
  // (e1+u)∘(e1+e2+2u) = e1·e1 + u⊳e2 + u◁e1 + 2u∗u = e3 + 3e1 + 2u + 10u
  Vector expected(4);
  expected << 3, 0, 1, 12;
  CHECK(unified_product(d, a, b) == expected);
  CHECK(build_unified(d, true)(a, b) == expected);
}

TEST_CASE("morphism pairs") {
  const ExtendingDatum d = a6_datum();
  CHECK(is_morphism_pair(d, d, MorphismPair::identity(2, 1)).passed());

  // r(u) = e2 breaks M6.
  const CheckReport r = is_morphism_pair(d, d, {column({1, 0}), one(1)});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("M6")->passed);
}

TEST_CASE("pulled-back datums are equivalent and morphisms agree with homomorphisms") {
  Rng rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    const ExtendingDatum d2 = random_datum(rng, 2 + trial % 2, 1 + trial % 2);
    const Index n = d2.dimZ(), m = d2.dimV;
    const MorphismPair pair{random_sparse_matrix(rng, n, m, 0.5), random_invertible(rng, m)};
    const ExtendingDatum d = pull_back(d2, pair);
    CHECK(datums_equivalent(d, d2, pair));
    CHECK(is_morphism_pair(d, d2, pair).passed());
    CHECK(is_homomorphism(build_unified(d, true), build_unified(d2, true), morphism_matrix(pair)).passed());
    // The inverse pair undoes the transport.
    CHECK(pull_back(d, inverse_pair(pair)) == d2);
    CHECK(datums_equivalent(d2, d, inverse_pair(pair)));
  }
}

TEST_CASE("equivalence is reflexive and detects differing datums") {
  const ExtendingDatum d = a6_datum();
  CHECK(datums_equivalent(d, d, MorphismPair::identity(2, 1)));
  const ExtendingDatum zero = ExtendingDatum::trivial(d.base, 1);
  CHECK_FALSE(datums_equivalent(d, zero, MorphismPair::identity(2, 1)));
  CHECK_FALSE(datums_equivalent(zero, d, MorphismPair::identity(2, 1)));
  CHECK_THROWS_AS(equivalence_report(d, d, {Matrix::Zero(2, 1), one(0)}), SingularMatrixError);
}

TEST_CASE("cohomologous datums") {
  const ExtendingDatum d = a6_datum();
  CHECK(datums_cohomologous(d, d, Matrix::Zero(2, 1)));

  // A crossed system on A1 (Z = span{e3}, W null of dim 2, ω(f1,f1) = e3) and
  // its transport along the coboundary of r(f1) = e3.
  CrossedSystem cs = CrossedSystem::trivial(Algebra::null(1), Algebra::null(2));
  cs.omega(0, 0, 0) = 1;
  const ExtendingDatum d2 = as_datum(cs);
  Matrix r = Matrix::Zero(1, 2);
  r(0, 0) = 1;
  const ExtendingDatum moved = pull_back(d2, {r, Matrix::Identity(2, 2)});
  CHECK(datums_cohomologous(moved, d2, r));
  CHECK(datums_equivalent(moved, d2, {r, Matrix::Identity(2, 2)}));

  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const ExtendingDatum base = random_datum(rng, 2, 1 + trial % 2);
    const Matrix rr = random_sparse_matrix(rng, 2, base.dimV, 0.5);
    const MorphismPair pair{rr, Matrix::Identity(base.dimV, base.dimV)};
    const ExtendingDatum other = pull_back(base, pair);
    if (other.actL != base.actL || other.actR != base.actR) {
      CHECK_THROWS_AS(cohomology_report(other, base, rr), PreconditionError);
      continue;
    }
    const bool coh = datums_cohomologous(other, base, rr);
    CHECK(coh);
    CHECK(coh == datums_equivalent(other, base, pair));
  }
}

TEST_CASE("shape errors") {
  ExtendingDatum d = ExtendingDatum::trivial(algebra_A1(), 1);
  d.omega = Tensor(2, 1, 3);
  CHECK_THROWS_AS(d.validate(), ShapeError);
  CHECK_THROWS_AS(verify_datum(d), ShapeError);
}
