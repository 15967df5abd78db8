#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/products.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

namespace {

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

MatchedPair a3_pair() { return factorization_extract(algebra_A3(), rows(3, {{1, 0, 0}, {0, 0, 1}}), rows(3, {{0, 1, 0}})); }

Matrix r_of(std::initializer_list<Rational> v) {
  Matrix m(static_cast<Index>(v.size()), 1);
  Index i = 0;
  for (const auto& x : v) m(i++, 0) = x;
  return m;
}

}  // namespace

TEST_CASE("bimodules") {
  const Bimodule zero{algebra_A1(), 2, Tensor(3, 2, 2), Tensor(2, 3, 2)};
  CHECK(is_bimodule(zero).passed());
  for (const Algebra& a : {algebra_A1(), algebra_A2(), algebra_A3(), algebra_A4(), algebra_A5(3), algebra_A6()})
    CHECK(is_bimodule(Bimodule::regular(a)).passed());
}

TEST_CASE("a character bimodule on A1 needs a character") {
  // u◁x = μ(x)u with μ = (2,0,2): the second axiom at (u, e1, e3) asks for
  // μ1μ3 = μ(e1·e3 + e3·e1) = 0, but μ1μ3 = 4.
  Bimodule b{algebra_A1(), 1, Tensor(3, 1, 1), Tensor(1, 3, 1)};
  b.actL(0, 0, 0) = 2;
  b.actL(0, 2, 0) = 2;
  const CheckReport r = is_bimodule(b);
  CHECK_FALSE(r.passed());
  const ConditionResult* f = r.first_failure();
  REQUIRE(f);
  CHECK(f->label == "BM2");
  CHECK(f->witness->basis_tuple == std::vector<Index>{0, 0, 2});
  CHECK_THROWS_AS(semidirect(b), PreconditionError);

  // With μ = 0 the action is trivial and everything holds.
  b.actL = Tensor(1, 3, 1);
  CHECK(is_bimodule(b).passed());
}

TEST_CASE("semidirect products") {
  const Bimodule zero{algebra_A4(), 1, Tensor(3, 1, 1), Tensor(1, 3, 1)};
  CHECK(semidirect(zero) == build_unified(ExtendingDatum::trivial(algebra_A4(), 1)));

  const Algebra s = semidirect(Bimodule::regular(algebra_A1()));
  CHECK(s.dim == 6);
  CHECK(is_zinbiel(s).passed());
  CHECK(s == build_unified(as_datum(Bimodule::regular(algebra_A1()))));
}

TEST_CASE("crossed products") {
  const CrossedSystem plain = CrossedSystem::trivial(algebra_A2(), Algebra::null(2));
  const Checked<Algebra> c = crossed(plain);
  CHECK(c.report.passed());
  CHECK(c.value == build_unified(ExtendingDatum::trivial(algebra_A2(), 2)));

  // A1 rebuilt from span{e3} and the null quotient with ω(f1,f1) = e3.
  CrossedSystem cs = CrossedSystem::trivial(Algebra::null(1), Algebra::null(2));
  cs.omega(0, 0, 0) = 1;
  const Checked<Algebra> a1 = crossed(cs);
  CHECK(a1.report.passed());
  // Crossed coordinates are (e3, f1, f2).
  const Matrix p = rows(3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}).transpose();
  CHECK(a1.value == change_of_basis(algebra_A1(), p));

  cs.omega = Tensor(2, 2, 1);
  cs.omega(0, 1, 0) = 1;
  CHECK(crossed(cs).report.passed());
}

TEST_CASE("crossed and bicrossed reports agree with the Zinbiel identity") {
  Rng rng(37);
  int crossed_pass = 0, matched_pass = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const CrossedSystem cs = random_crossed_system(rng);
    const Checked<Algebra> c = crossed(cs);
    crossed_pass += c.report.passed();
    CHECK(c.report.passed() == is_zinbiel(c.value).passed());
    CHECK(c.value == build_unified(as_datum(cs), true));

    const MatchedPair mp = random_matched_pair(rng);
    const Checked<Algebra> b = bicrossed(mp);
    matched_pass += b.report.passed();
    CHECK(b.report.passed() == is_zinbiel(b.value).passed());
    CHECK(b.value == build_unified(as_datum(mp), true));
  }
  CHECK(crossed_pass > 10);
  CHECK(matched_pass > 10);
}

TEST_CASE("the A3 factorization") {
  const MatchedPair mp = a3_pair();
  // Z coordinates (e1, e3), W = span{e2}.
  CHECK(mp.projL(0, 0, 1) == Rational(1, 2));
  CHECK(mp.projR(0, 0, 1) == Rational(-1, 2));
  CHECK(mp.actL.is_zero());
  CHECK(mp.actR.is_zero());
  const Checked<Algebra> b = bicrossed(mp);
  CHECK(b.report.passed());
  const Matrix p = rows(3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}).transpose();
  CHECK(b.value == change_of_basis(algebra_A3(), p));

  MatchedPair bent = mp;
  bent.actL(0, 0, 0) = 1;  // w◁e1 = w
  const Checked<Algebra> bad = bicrossed(bent);
  CHECK_FALSE(bad.report.passed());
  CHECK_FALSE(is_zinbiel(bad.value).passed());
}

TEST_CASE("factorizations") {
  const Algebra direct = build_unified(ExtendingDatum::trivial(algebra_A1(), 1));
  const MatchedPair mp = factorization_extract(direct, rows(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
                                               rows(4, {{0, 0, 0, 1}}));
  CHECK(mp.actL.is_zero());
  CHECK(mp.actR.is_zero());
  CHECK(mp.projL.is_zero());
  CHECK(mp.projR.is_zero());
  CHECK_THROWS_AS(factorization_extract(algebra_A2(), rows(3, {{1, 0, 0}, {0, 0, 1}}), rows(3, {{0, 1, 0}})),
                  PreconditionError);
}

TEST_CASE("deformation maps of the A3 pair") {
  const MatchedPair mp = a3_pair();
  CHECK(is_deformation_map(mp, Matrix::Zero(2, 1)));
  for (int t : {1, -2, 5}) CHECK(is_deformation_map(mp, r_of({0, t})));
  CHECK(is_deformation_map(mp, r_of({1, 0})));
  CHECK(r_deform(mp, Matrix::Zero(2, 1)) == mp.top);
  CHECK(r_deform(mp, r_of({1, 0})) == Algebra::null(1));

  const auto found = search_deformation_maps(mp, {-1, 0, 1});
  CHECK(found.size() == 9);
  CHECK(found.front() == r_of({-1, -1}));
  CHECK(found.back() == r_of({1, 1}));
  CHECK(search_deformation_maps(mp, {}).empty());
  CHECK_THROWS_AS(search_deformation_maps(mp, {-1, 0, 1}, 4), PreconditionError);
}

TEST_CASE("deformation maps of a trivial pair square to zero") {
  // Z = A1, W null of dim 1, no actions: the condition is r(u)·r(v) = 0.
  const MatchedPair mp = MatchedPair::trivial(algebra_A1(), Algebra::null(1));
  const auto found = search_deformation_maps(mp, {0, 1});
  for (const auto& r : found) CHECK(is_zero(algebra_A1()(Vector(r.col(0)), Vector(r.col(0)))));
  // r(u) ∈ {0,1}³ with first coordinate 0.
  CHECK(found.size() == 4);
}

TEST_CASE("r-deformations are Zinbiel and their graphs are complements") {
  for (const Algebra& a : {algebra_A1(), algebra_A3(), algebra_A4(), algebra_A5(1), algebra_A6()}) {
    for (unsigned mask : {1u, 2u, 3u, 4u, 5u, 6u}) {
      Matrix zr(0, 3), wr(0, 3);
      for (Index i = 0; i < 3; ++i) {
        Matrix& target = (mask >> i) & 1u ? zr : wr;
        target.conservativeResize(target.rows() + 1, 3);
        target.row(target.rows() - 1) = RowVector(unit(3, i).transpose());
      }
      if (!subspace_check(a, zr, SubspaceMode::Subalgebra) || !subspace_check(a, wr, SubspaceMode::Subalgebra)) continue;
      const MatchedPair mp = factorization_extract(a, zr, wr);
      const Algebra e = bicrossed(mp).value;
      for (const auto& r : search_deformation_maps(mp, {-1, 0, 1})) {
        CHECK(is_zinbiel(r_deform(mp, r)).passed());
        CHECK(subspace_check(e, deformation_graph(mp, r), SubspaceMode::Subalgebra));
      }
    }
  }
}

TEST_CASE("equivalent deformations") {
  const MatchedPair mp = a3_pair();
  Matrix id = Matrix::Identity(1, 1);
  CHECK(deformations_equivalent(mp, r_of({1, 0}), r_of({1, 0}), {id}));
  CHECK(deformations_equivalent(mp, r_of({1, 0}), r_of({0, 1}), {id}));
  CHECK_THROWS_AS(deformation_equivalence_report(mp, r_of({1, 0}), r_of({1, 0}), {Matrix::Zero(1, 1)}),
                  SingularMatrixError);

  // Every pair of searched maps on A4 with Z = span{e1,e3}, W = span{e2}.
  const Algebra a4 = algebra_A4();
  const MatchedPair p4 = factorization_extract(a4, rows(3, {{1, 0, 0}, {0, 0, 1}}), rows(3, {{0, 1, 0}}));
  const auto maps = search_deformation_maps(p4, {-1, 0, 1});
  REQUIRE(!maps.empty());
  for (const auto& r : maps)
    for (const auto& R : maps) {
      const bool same = deformations_equivalent(p4, r, R, {id});
      CHECK(same == is_homomorphism(r_deform(p4, r), r_deform(p4, R), id).passed());
    }
}
