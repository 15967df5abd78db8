#include "zinbiel/catalog.hpp"

#include <algorithm>

namespace zinbiel {

namespace {

Rational frac(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

// Structure constants entered 1-based, as the tables are printed.
class Table {
 public:
  explicit Table(Index n) : a_(n) {}
  explicit Table(Algebra start) : a_(std::move(start)) {}
  Table& operator()(Index i, Index j, Index k, const Rational& c) {
    a_.mult(i - 1, j - 1, k - 1) += c;
    return *this;
  }
  Algebra done(std::vector<std::string> names = {}) {
    a_.names = std::move(names);
    return a_;
  }

 private:
  Algebra a_;
};

std::vector<std::string> base_names() { return {"e1", "e2", "e3"}; }
std::vector<std::string> extension_names() { return {"e1", "e2", "e3", "u"}; }

// Rows follow the printed matrices: row i holds the coordinates of M(e_i).
Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  const Index n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(j, i) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

FlagDatum reduced_flag(const Algebra& base, FlagMode mode, const std::vector<Rational>& mu,
                       const std::vector<std::vector<Rational>>& rows) {
  FlagDatum fd = FlagDatum::zero(base);
  for (Index i = 0; i < base.dim; ++i) fd.mu(i) = mu[static_cast<std::size_t>(i)];
  (mode == FlagMode::D ? fd.D : fd.T) = from_rows(rows);
  return fd;
}

std::vector<FlagFamily> builtin_families() {
  using P = const Params&;
  using B = const Algebra&;
  const Rational O = 0;
  const Rational half = frac(1, 2);
  const Rational third = frac(1, 3);
  const FlagMode D = FlagMode::D;
  const FlagMode T = FlagMode::T;
  std::vector<FlagFamily> f;

  f.push_back({"D1", "DA1", "A1", D, {"mu1", "a21"}, {"mu1"}, {{"mu1", 2}, {"a21", 3}}, [=](B z, P p) {
                 const Rational& m1 = p.at("mu1");
                 const Rational& a21 = p.at("a21");
                 return reduced_flag(z, D, {m1, O, half * m1 * m1}, {{O, O, O}, {a21, O, -2 * a21 / m1}, {O, O, O}});
               }});
  f.push_back({"D2", "DA2", "A2", D, {"mu1"}, {}, {{"mu1", 2}}, [=](B z, P p) {
                 const Rational& m1 = p.at("mu1");
                 return reduced_flag(z, D, {m1, O, half * m1 * m1}, {{O, O, O}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"D31", "DA3.1", "A3", D, {"mu2", "mu3", "a21", "a31"}, {},
               {{"mu2", 1}, {"mu3", 1}, {"a21", 1}, {"a31", 2}}, [=](B z, P p) {
                 return reduced_flag(z, D, {O, p.at("mu2"), p.at("mu3")},
                                     {{O, O, O}, {p.at("a21"), O, O}, {p.at("a31"), O, O}});
               }});
  f.push_back({"D32", "DA3.2", "A3", D, {"mu1", "mu3", "a12", "a32"}, {},
               {{"mu1", 1}, {"mu3", 1}, {"a12", 1}, {"a32", 2}}, [=](B z, P p) {
                 return reduced_flag(z, D, {p.at("mu1"), O, p.at("mu3")},
                                     {{O, p.at("a12"), O}, {O, O, O}, {O, p.at("a32"), O}});
               }});
  f.push_back({"D41", "DA4.1", "A4", D, {"mu1", "mu2", "a21", "a23"}, {},
               {{"mu1", 1}, {"mu2", 1}, {"a21", 1}, {"a23", 2}}, [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m2 = p.at("mu2");
                 return reduced_flag(z, D, {m1, m2, m1 * m2}, {{O, O, O}, {p.at("a21"), O, p.at("a23")}, {O, O, O}});
               }});
  f.push_back({"D42", "DA4.2", "A4", D, {"mu1", "mu2", "a12"}, {}, {{"mu1", 1}, {"mu2", 2}, {"a12", 1}},
               [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m2 = p.at("mu2"), &a12 = p.at("a12");
                 return reduced_flag(z, D, {m1, m2, m1 * m2}, {{O, a12, O}, {O, O, O}, {O, m2 * a12, O}});
               }});
  f.push_back({"D5", "DA5", "A5", D, {"lambda", "a13", "a23"}, {}, {{"lambda", 1}, {"a13", 1}, {"a23", 2}},
               [=](B z, P p) {
                 return reduced_flag(z, D, {O, O, O}, {{O, O, p.at("a13")}, {O, O, p.at("a23")}, {O, O, O}});
               }});
  f.push_back({"D6", "DA6", "A6", D, {"mu1"}, {}, {{"mu1", 1}}, [=](B z, P p) {
                 const Rational& m1 = p.at("mu1");
                 return reduced_flag(z, D, {m1, half * m1 * m1, third * m1 * m1 * m1}, {{O, O, O}, {O, O, O}, {O, O, O}});
               }});

  f.push_back({"T11", "TA1.1", "A1", T, {"mu1", "mu2", "b21"}, {"mu1"}, {{"mu1", 1}, {"mu2", 0}, {"b21", 1}},
               [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &b21 = p.at("b21");
                 return reduced_flag(z, T, {m1, p.at("mu2"), half * m1 * m1},
                                     {{O, O, O}, {b21, O, -2 / m1 * b21}, {O, O, O}});
               }});
  f.push_back({"T12", "TA1.2", "A1", T, {"mu1", "mu2", "b12"}, {"mu1"}, {{"mu1", 1}, {"mu2", 0}, {"b12", 1}},
               [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m2 = p.at("mu2"), &b12 = p.at("b12");
                 return reduced_flag(z, T, {m1, m2, half * m1 * m1},
                                     {{O, b12, -2 * m2 / (m1 * m1) * b12}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T21", "TA2.1", "A2", T, {"mu1", "b21"}, {"mu1"}, {{"mu1", 2}, {"b21", 1}}, [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &b21 = p.at("b21");
                 return reduced_flag(z, T, {m1, m1, half * m1 * m1}, {{O, O, O}, {b21, O, -2 / m1 * b21}, {O, O, O}});
               }});
  f.push_back({"T22", "TA2.2", "A2", T, {"mu1", "b12"}, {"mu1"}, {{"mu1", 2}, {"b12", 1}}, [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &b12 = p.at("b12");
                 return reduced_flag(z, T, {m1, m1, half * m1 * m1}, {{O, b12, -2 / m1 * b12}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T31", "TA3.1", "A3", T, {"mu2", "mu3", "b21"}, {}, {{"mu2", 1}, {"mu3", 1}, {"b21", 1}},
               [=](B z, P p) {
                 return reduced_flag(z, T, {O, p.at("mu2"), p.at("mu3")}, {{O, O, O}, {p.at("b21"), O, O}, {O, O, O}});
               }});
  f.push_back({"T32", "TA3.2", "A3", T, {"mu2", "mu3", "b12"}, {"mu3"}, {{"mu2", 1}, {"mu3", 1}, {"b12", 1}},
               [=](B z, P p) {
                 const Rational &m2 = p.at("mu2"), &m3 = p.at("mu3"), &b12 = p.at("b12");
                 return reduced_flag(z, T, {O, m2, m3}, {{O, b12, -m2 / m3 * b12}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T33", "TA3.3", "A3", T, {"mu1", "mu3", "b21"}, {"mu3"}, {{"mu1", 1}, {"mu3", 1}, {"b21", 1}},
               [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m3 = p.at("mu3"), &b21 = p.at("b21");
                 return reduced_flag(z, T, {m1, O, m3}, {{O, O, O}, {b21, O, -m1 / m3 * b21}, {O, O, O}});
               }});
  f.push_back({"T34", "TA3.4", "A3", T, {"mu1", "mu3", "b12"}, {}, {{"mu1", 1}, {"mu3", 1}, {"b12", 1}},
               [=](B z, P p) {
                 return reduced_flag(z, T, {p.at("mu1"), O, p.at("mu3")}, {{O, p.at("b12"), O}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T41", "TA4.1", "A4", T, {"mu1", "mu2", "b21"}, {"mu2"}, {{"mu1", 1}, {"mu2", 1}, {"b21", 1}},
               [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m2 = p.at("mu2"), &b21 = p.at("b21");
                 return reduced_flag(z, T, {m1, m2, m1 * m2}, {{O, O, O}, {b21, O, -b21 / m2}, {O, O, O}});
               }});
  f.push_back({"T42", "TA4.2", "A4", T, {"mu1", "mu2", "b11", "b12"}, {"mu1", "mu2"},
               {{"mu1", 1}, {"mu2", 1}, {"b11", 1}, {"b12", 1}}, [=](B z, P p) {
                 const Rational &m1 = p.at("mu1"), &m2 = p.at("mu2"), &b11 = p.at("b11"), &b12 = p.at("b12");
                 return reduced_flag(z, T, {m1, m2, m1 * m2}, {{b11, b12, -b11 / m2 - b12 / m1}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T51", "TA5.1", "A5", T, {"lambda", "b23"}, {}, {{"lambda", 1}, {"b23", 1}}, [=](B z, P p) {
                 return reduced_flag(z, T, {O, O, O}, {{O, O, O}, {O, O, p.at("b23")}, {O, O, O}});
               }});
  f.push_back({"T52", "TA5.2", "A5", T, {"lambda", "mu1"}, {}, {{"lambda", 1}, {"mu1", 2}}, [=](B z, P p) {
                 const Rational& m1 = p.at("mu1");
                 return reduced_flag(z, T, {m1, half * m1, half * m1 * m1}, {{O, O, O}, {O, O, O}, {O, O, O}});
               }});
  f.push_back({"T6", "TA6", "A6", T, {"mu1"}, {}, {{"mu1", 1}}, [=](B z, P p) {
                 const Rational& m1 = p.at("mu1");
                 return reduced_flag(z, T, {m1, half * m1 * m1, third * m1 * m1 * m1}, {{O, O, O}, {O, O, O}, {O, O, O}});
               }});
  return f;
}

// The (DA), (TA) tables exactly as printed; u is basis index 4.
Algebra printed(const std::string& id, const Params& p) {
  const Rational half = frac(1, 2);
  const Rational third = frac(1, 3);
  auto v = [&](const char* name) { return p.at(name); };
  auto ext = [](const Algebra& base) {
    Table t(4);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        for (Index k = 0; k < 3; ++k) t(i + 1, j + 1, k + 1, base.mult(i, j, k));
    return t;
  };

  if (id == "DA1") {
    const Rational m1 = v("mu1"), a21 = v("a21");
    return ext(algebra_A1())(4, 1, 4, m1)(4, 2, 1, a21)(4, 2, 3, -2 * a21 / m1)(4, 3, 4, half * m1 * m1).done();
  }
  if (id == "DA2") {
    const Rational m1 = v("mu1");
    return ext(algebra_A2())(4, 1, 4, m1)(4, 3, 4, half * m1 * m1).done();
  }
  if (id == "DA3.1")
    return ext(algebra_A3())(4, 2, 1, v("a21"))(4, 2, 4, v("mu2"))(4, 3, 1, v("a31"))(4, 3, 4, v("mu3")).done();
  if (id == "DA3.2")
    return ext(algebra_A3())(4, 1, 2, v("a12"))(4, 1, 4, v("mu1"))(4, 3, 2, v("a32"))(4, 3, 4, v("mu3")).done();
  if (id == "DA4.1") return ext(algebra_A4())(4, 2, 1, v("a21"))(4, 2, 3, v("a23")).done();
  if (id == "DA4.2") return ext(algebra_A4())(4, 1, 2, v("a12"))(4, 3, 2, v("mu2") * v("a12")).done();
  if (id == "DA5") return ext(algebra_A5(v("lambda")))(4, 1, 3, v("a13"))(4, 2, 3, v("a23")).done();
  if (id == "DA6") {
    const Rational m1 = v("mu1");
    return ext(algebra_A6())(4, 2, 4, half * m1 * m1)(4, 3, 4, third * m1 * m1 * m1).done();
  }

  auto a1_mu = [&](Table t, const Rational& m1, const Rational& m2) {
    return t(4, 1, 4, m1)(4, 2, 4, m2)(4, 3, 4, half * m1 * m1);
  };
  if (id == "TA1.1") {
    const Rational m1 = v("mu1"), b21 = v("b21");
    return a1_mu(ext(algebra_A1()), m1, v("mu2"))(2, 4, 1, b21)(2, 4, 3, -2 / m1 * b21).done();
  }
  if (id == "TA1.2") {
    const Rational m1 = v("mu1"), m2 = v("mu2"), b12 = v("b12");
    return a1_mu(ext(algebra_A1()), m1, m2)(1, 4, 2, b12)(1, 4, 3, -2 * m2 / (m1 * m1) * b12).done();
  }
  if (id == "TA2.1") {
    const Rational m1 = v("mu1"), b21 = v("b21");
    return a1_mu(ext(algebra_A2()), m1, m1)(2, 4, 1, b21)(2, 4, 3, -2 / m1 * b21).done();
  }
  if (id == "TA2.2") {
    const Rational m1 = v("mu1"), b12 = v("b12");
    return a1_mu(ext(algebra_A2()), m1, m1)(1, 4, 2, b12)(1, 4, 3, -2 / m1 * b12).done();
  }
  if (id == "TA3.1")
    return ext(algebra_A3())(4, 2, 4, v("mu2"))(4, 3, 4, v("mu3"))(2, 4, 1, v("b21")).done();
  if (id == "TA3.2") {
    const Rational m2 = v("mu2"), m3 = v("mu3"), b12 = v("b12");
    return ext(algebra_A3())(4, 2, 4, m2)(4, 3, 4, m3)(1, 4, 2, b12)(1, 4, 3, -m2 / m3 * b12).done();
  }
  if (id == "TA3.3") {
    const Rational m1 = v("mu1"), m3 = v("mu3"), b21 = v("b21");
    return ext(algebra_A3())(4, 1, 4, m1)(4, 3, 4, m3)(2, 4, 1, b21)(2, 4, 3, -m1 / m3 * b21).done();
  }
  if (id == "TA3.4") return ext(algebra_A3())(4, 1, 4, v("mu1"))(4, 3, 4, v("mu3"))(1, 4, 2, v("b12")).done();
  if (id == "TA4.1") {
    const Rational m1 = v("mu1"), m2 = v("mu2"), b21 = v("b21");
    return ext(algebra_A4())(4, 1, 4, m1)(4, 2, 4, m2)(4, 3, 4, m1 * m2)(2, 4, 1, b21)(2, 4, 3, -b21 / m1).done();
  }
  if (id == "TA4.2") {
    const Rational m1 = v("mu1"), m2 = v("mu2"), b11 = v("b11"), b12 = v("b12");
    return ext(algebra_A4())(4, 1, 4, m1)(4, 2, 4, m2)(4, 3, 4, m1 * m2)(1, 4, 1, b11)(1, 4, 2, b12)(
               1, 4, 3, -(b11 / m2 + b12 / m1))
        .done();
  }
  if (id == "TA5.1") return ext(algebra_A5(v("lambda")))(2, 4, 3, v("b23")).done();
  if (id == "TA5.2") {
    const Rational m1 = v("mu1");
    return ext(algebra_A5(v("lambda")))(4, 1, 4, m1)(4, 2, 4, half * m1)(4, 3, 4, half * m1 * m1).done();
  }
  if (id == "TA6") {
    const Rational m1 = v("mu1");
    return ext(algebra_A6())(4, 1, 4, m1)(4, 2, 4, half * m1 * m1)(4, 3, 4, third * m1 * m1 * m1).done();
  }
  throw InputError("no printed table for '" + id + "'");
}

const std::vector<std::string>& base_ids() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A4", "A5", "A6"};
  return ids;
}

bool is_base_id(const std::string& id) {
  return std::find(base_ids().begin(), base_ids().end(), id) != base_ids().end();
}

}  // namespace

Algebra algebra_A1() { return Table(3)(1, 1, 3, 1).done(base_names()); }

Algebra algebra_A2() { return Table(3)(1, 1, 3, 1)(2, 2, 3, 1).done(base_names()); }

Algebra algebra_A3() { return Table(3)(1, 2, 3, frac(1, 2))(2, 1, 3, frac(-1, 2)).done(base_names()); }

Algebra algebra_A4() { return Table(3)(2, 1, 3, 1).done(base_names()); }

Algebra algebra_A5(const Rational& lambda) {
  if (lambda == 0) throw PreconditionError("A5 requires lambda ≠ 0");
  return Table(3)(1, 1, 3, 1)(1, 2, 3, 1)(2, 2, 3, lambda).done(base_names());
}

Algebra algebra_A6() { return Table(3)(1, 1, 2, 1)(1, 2, 3, frac(1, 2))(2, 1, 3, 1).done(base_names()); }

Catalog::Catalog() : families_(builtin_families()) {}

Catalog Catalog::empty() {
  Catalog c;
  c.builtin_ = false;
  c.families_.clear();
  return c;
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  if (builtin_) out = base_ids();
  for (const auto& f : families_) out.push_back(f.extension_id);
  return out;
}

const FlagFamily& Catalog::family(const std::string& id) const {
  for (const auto& f : families_)
    if (f.id == id || f.extension_id == id) return f;
  throw InputError("unknown family '" + id + "'");
}

void Catalog::check_params(const std::vector<std::string>& required, const std::vector<std::string>& nonzero,
                           const Params& params) const {
  for (const auto& name : required)
    if (!params.contains(name)) throw InputError("missing parameter '" + name + "'");
  for (const auto& [name, value] : params)
    if (std::find(required.begin(), required.end(), name) == required.end())
      throw InputError("unexpected parameter '" + name + "'");
  for (const auto& name : nonzero)
    if (params.at(name) == 0) throw PreconditionError("parameter '" + name + "' must be nonzero");
}

Algebra Catalog::base_algebra(const std::string& id, const Params& params) const {
  if (auto it = overrides_.find(id); it != overrides_.end()) return it->second;
  if (!builtin_) throw InputError("unknown algebra '" + id + "'");
  if (id == "A1") return algebra_A1();
  if (id == "A2") return algebra_A2();
  if (id == "A3") return algebra_A3();
  if (id == "A4") return algebra_A4();
  if (id == "A5") return algebra_A5(params.at("lambda"));
  if (id == "A6") return algebra_A6();
  throw InputError("unknown algebra '" + id + "'");
}

std::vector<std::string> Catalog::required_params(const std::string& id) const {
  if (is_base_id(id) && builtin_) return id == "A5" ? std::vector<std::string>{"lambda"} : std::vector<std::string>{};
  return family(id).params;
}

Params Catalog::recorded_params(const std::string& id) const {
  if (is_base_id(id) && builtin_) return id == "A5" ? Params{{"lambda", 1}} : Params{};
  return family(id).recorded;
}

Fixture Catalog::fixture(const std::string& id) const {
  Params p = recorded_params(id);
  return {id, p, get_algebra(id, p)};
}

Algebra Catalog::get_algebra(const std::string& id, const Params& params) const {
  if (is_base_id(id) && (builtin_ || overrides_.contains(id))) {
    check_params(required_params(id), {}, params);
    return base_algebra(id, params);
  }
  const FlagFamily& f = family(id);
  if (f.extension_id != id) throw InputError("'" + id + "' names a flag family; use its extension id " + f.extension_id);
  Algebra e = build_unified(flag_to_datum(get_flag(id, params)), true);
  e.names = extension_names();
  return e;
}

FlagDatum Catalog::get_flag(const std::string& family_id, const Params& params) const {
  const FlagFamily& f = family(family_id);
  check_params(f.params, f.nonzero, params);
  return f.make(base_algebra(f.algebra_id, params), params);
}

Algebra Catalog::printed_table(const std::string& extension_id, const Params& params) const {
  const FlagFamily& f = family(extension_id);
  check_params(f.params, f.nonzero, params);
  return printed(f.extension_id, params);
}

std::vector<std::string> Catalog::printed_discrepancies(const std::string& extension_id, const Params& params) const {
  const Algebra built = get_algebra(family(extension_id).extension_id, params);
  const Algebra table = printed_table(extension_id, params);
  const auto names = extension_names();
  auto show = [&](const Vector& w) {
    std::string s;
    for (Index k = 0; k < w.size(); ++k) {
      if (w(k) == 0) continue;
      s += (s.empty() ? "" : " + ") + to_string(w(k)) + "*" + names[static_cast<std::size_t>(k)];
    }
    return s.empty() ? std::string("0") : s;
  };
  std::vector<std::string> out;
  for (Index i = 0; i < built.dim; ++i)
    for (Index j = 0; j < built.dim; ++j) {
      const Vector a = built.mult.fiber(i, j);
      const Vector b = table.mult.fiber(i, j);
      if (a != b)
        out.push_back(names[static_cast<std::size_t>(i)] + "∘" + names[static_cast<std::size_t>(j)] +
                      ": constructed " + show(a) + ", printed " + show(b));
    }
  return out;
}

}  // namespace zinbiel
