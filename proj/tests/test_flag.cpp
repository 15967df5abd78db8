#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;

namespace {

RowVector row(std::initializer_list<Rational> v) {
  RowVector r(static_cast<Index>(v.size()));
  Index i = 0;
  for (const auto& x : v) r(i++) = x;
  return r;
}

bool flag_matches_extension(const FlagDatum& fd) {
  return verify_flag(fd).passed() == is_zinbiel(build_unified(flag_to_datum(fd), true)).passed();
}

}  // namespace

TEST_CASE("the zero flag datum") {
  const FlagDatum fd = FlagDatum::zero(algebra_A1());
  const CheckReport r = verify_flag(fd);
  CHECK(r.passed());
  CHECK(r.results.size() == 11);
  CHECK(build_flag_extension(fd).algebra == build_unified(ExtendingDatum::trivial(algebra_A1(), 1)));
}

TEST_CASE("F1 on A1 ties mu3 to mu1") {
  FlagDatum fd = FlagDatum::zero(algebra_A1());
  fd.mu = row({2, 0, 1});
  const CheckReport r = verify_flag(fd);
  const ConditionResult* f = r.first_failure();
  REQUIRE(f);
  CHECK(f->label == "F1");
  CHECK(f->witness->basis_tuple == std::vector<Index>{0, 0});
  CHECK_THROWS_AS(build_flag_extension(fd), PreconditionError);
}

TEST_CASE("the recorded D1 point violates F1 at (e1,e3)") {
  // μ = (2,0,2) gives μ(e1)μ(e3) = 4 while e1·e3 = e3·e1 = 0.
  const FlagDatum fd = Catalog().get_flag("D1", {{"mu1", 2}, {"a21", 3}});
  CHECK(fd.D(0, 1) == 3);
  CHECK(fd.D(2, 1) == -3);
  const CheckReport r = verify_flag(fd);
  REQUIRE_FALSE(r.passed());
  CHECK(r.first_failure()->label == "F1");
  CHECK(r.first_failure()->witness->basis_tuple == std::vector<Index>{0, 2});
  CHECK(flag_matches_extension(fd));
}

TEST_CASE("the D5 point on A5 builds DA5") {
  const FlagDatum fd = Catalog().get_flag("D5", {{"lambda", 1}, {"a13", 1}, {"a23", 2}});
  CHECK(verify_flag(fd).passed());
  const Algebra e = build_flag_extension(fd).algebra;
  CHECK(is_zinbiel(e).passed());
  CHECK(e(unit(4, 3), unit(4, 0)) == unit(4, 2));
  CHECK(e(unit(4, 3), unit(4, 1)) == Vector(2 * unit(4, 2)));
  CHECK(e == Catalog().get_algebra("DA5", {{"lambda", 1}, {"a13", 1}, {"a23", 2}}));
}

TEST_CASE("flag conditions hold exactly when the extension is Zinbiel") {
  Rng rng(41);
  int passing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FlagDatum fd = random_flag_datum(rng);
    passing += verify_flag(fd).passed();
    CHECK(flag_matches_extension(fd));
  }
  CHECK(passing > 10);
  const Catalog catalog;
  for (const auto& f : catalog.families())
    for (int k = 0; k < 3; ++k) {
      Params p;
      for (const auto& name : f.params) p[name] = random_nonzero_rational(rng);
      CHECK(flag_matches_extension(catalog.get_flag(f.id, p)));
    }
}

TEST_CASE("mu constraints") {
  const auto null = mu_constraints(Algebra::null(2));
  CHECK(null.size() == 3);
  std::vector<std::string> text;
  for (const auto& p : mu_constraints(algebra_A1())) text.push_back(to_string(p));
  CHECK(std::find(text.begin(), text.end(), "mu1^2 - 2*mu3") != text.end());
  CHECK(std::find(text.begin(), text.end(), "mu1*mu2") != text.end());
  CHECK(std::find(text.begin(), text.end(), "mu3^2") != text.end());
  std::vector<std::string> a3;
  for (const auto& p : mu_constraints(algebra_A3())) a3.push_back(to_string(p));
  CHECK(std::find(a3.begin(), a3.end(), "mu1*mu2") != a3.end());
  // Each constraint vanishes exactly where F1 holds.
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const RowVector mu = random_sparse_matrix(rng, 1, 3, 0.3).row(0);
    const std::vector<Rational> at{mu(0), mu(1), mu(2)};
    bool all_zero = true;
    for (const auto& p : mu_constraints(algebra_A1())) all_zero = all_zero && p.evaluate(at) == 0;
    CHECK(all_zero == mu_report(algebra_A1(), mu).passed());
  }
}

TEST_CASE("reduced solver rejects mu that violates F1") {
  CHECK_THROWS_AS(solve_reduced(algebra_A1(), row({2, 0, 2}), FlagMode::D), PreconditionError);
  CHECK_THROWS_AS(solve_reduced(algebra_A2(), row({1, 0, Rational(1, 2)}), FlagMode::D), PreconditionError);
  CHECK_THROWS_AS(solve_reduced(algebra_A1(), row({1, 0, 2}), FlagMode::T), PreconditionError);
}

TEST_CASE("reduced solver on A5 at mu = 0") {
  const Algebra a5 = algebra_A5(1);
  const SolutionFamily d = solve_reduced(a5, RowVector::Zero(3), FlagMode::D);
  CHECK(d.linear_basis.size() == 2);
  CHECK(d.residuals.empty());
  // The D5 shape: D(e1) = a13·e3, D(e2) = a23·e3.
  const FlagDatum d5 = Catalog().get_flag("D5", {{"lambda", 1}, {"a13", 3}, {"a23", -1}});
  const std::vector<Rational> t{3, -1};
  CHECK(d.at(t) == d5.D);

  const SolutionFamily tc = solve_reduced(a5, RowVector::Zero(3), FlagMode::T);
  CHECK(tc.linear_basis.size() == 3);
  std::vector<std::string> res;
  for (const auto& p : tc.residuals) res.push_back(to_string(p));
  CHECK(res == std::vector<std::string>{"t1*t3", "t2*t3", "t3^2"});
}

TEST_CASE("points of a solution family are flag datums") {
  Rng rng(47);
  for (const Algebra& z : {algebra_A1(), algebra_A2(), algebra_A3(), algebra_A4(), algebra_A5(2), algebra_A6(),
                           Algebra::null(2)}) {
    for (FlagMode mode : {FlagMode::D, FlagMode::T}) {
      const SolutionFamily s = solve_reduced(z, RowVector::Zero(z.dim), mode);
      if (s.linear_basis.empty()) continue;
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> t(s.linear_basis.size());
        for (auto& x : t) x = random_nonzero_rational(rng) * Rational(trial % 3 == 0 ? 0 : 1);
        // Keep only one coordinate on some trials so residual curves are sampled too.
        if (trial % 2) std::fill(t.begin() + 1, t.end(), Rational(0));
        bool on_variety = true;
        for (const auto& p : s.residuals) on_variety = on_variety && p.evaluate(t) == 0;
        FlagDatum fd = FlagDatum::zero(z);
        (mode == FlagMode::D ? fd.D : fd.T) = s.at(t);
        CHECK(verify_flag(fd).passed() == on_variety);
      }
    }
  }
}

TEST_CASE("flag equivalence") {
  const Catalog catalog;
  const FlagDatum fd = catalog.get_flag("D1", {{"mu1", 2}, {"a21", 3}});
  CHECK(flag_equivalent(fd, fd, {1, Vector::Zero(3)}));

  const FlagDatum line = FlagDatum::zero(Algebra::null(1));
  CHECK(flag_equivalent(line, line, {2, Vector::Zero(1)}));

  const FlagDatum doubled = catalog.get_flag("D1", {{"mu1", 2}, {"a21", 6}});
  CHECK(flag_equivalent(doubled, fd, {2, Vector::Zero(3)}));
  CHECK_FALSE(flag_equivalent(fd, doubled, {2, Vector::Zero(3)}));

  const CheckReport r = flag_equivalence_report(fd, doubled, {2, Vector::Zero(3)});
  CHECK(r.find("mu")->passed);
  CHECK_FALSE(r.find("D")->passed);
}

TEST_CASE("transported flag datums are equivalent") {
  Rng rng(53);
  const Catalog catalog;
  for (int trial = 0; trial < 60; ++trial) {
    const FlagFamily& f = catalog.families()[static_cast<std::size_t>(trial) % catalog.families().size()];
    Params p;
    for (const auto& name : f.params) p[name] = random_nonzero_rational(rng);
    FlagDatum fd2 = catalog.get_flag(f.id, p);
    fd2.k0 = Rational(trial % 3);
    fd2.x0 = random_sparse_matrix(rng, 3, 1, 0.4).col(0);
    const FlagEquivalenceWitness w{random_nonzero_rational(rng), random_sparse_matrix(rng, 3, 1, 0.5).col(0)};
    const FlagDatum fd = flag_transport(fd2, w);
    CHECK(flag_equivalent(fd, fd2, w));
    CHECK(fd.k0 == w.q * fd2.k0 + (fd2.mu * w.r_vec)(0));
    FlagDatum off = fd;
    off.k0 += 1;
    CHECK_FALSE(flag_equivalent(off, fd2, w));
  }
}
