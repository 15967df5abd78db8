#include "zinbiel/extending.hpp"

namespace zinbiel {

namespace {

using Sides = std::pair<Vector, Vector>;

Vector concat(const Vector& z, const Vector& v) {
  Vector out(z.size() + v.size());
  out << z, v;
  return out;
}

}  // namespace

ExtendingDatum ExtendingDatum::trivial(const Algebra& base, Index dimV) {
  const Index n = base.dim;
  const Index m = dimV;
  return ExtendingDatum{base,           m,
                        Tensor(m, n, m), Tensor(n, m, m),
                        Tensor(n, m, n), Tensor(m, n, n),
                        Tensor(m, m, n), Tensor(m, m, m)};
}

void ExtendingDatum::validate() const {
  const Index n = base.dim;
  const Index m = dimV;
  if (!base.mult.has_dims(n, n, n)) throw ShapeError("datum: base tensor is not n×n×n");
  if (!actL.has_dims(m, n, m)) throw ShapeError("datum: actL must be V×Z→V");
  if (!actR.has_dims(n, m, m)) throw ShapeError("datum: actR must be Z×V→V");
  if (!projL.has_dims(n, m, n)) throw ShapeError("datum: projL must be Z×V→Z");
  if (!projR.has_dims(m, n, n)) throw ShapeError("datum: projR must be V×Z→Z");
  if (!omega.has_dims(m, m, n)) throw ShapeError("datum: omega must be V×V→Z");
  if (!star.has_dims(m, m, m)) throw ShapeError("datum: star must be V×V→V");
}

InclusionPresentation coordinate_presentation(const Algebra& e, const std::vector<Index>& z_indices) {
  const Index total = e.dim;
  std::vector<bool> in_z(static_cast<std::size_t>(total), false);
  for (Index i : z_indices) {
    if (i < 0 || i >= total) throw PreconditionError("coordinate_presentation: index out of range");
    if (in_z[static_cast<std::size_t>(i)]) throw PreconditionError("coordinate_presentation: repeated index");
    in_z[static_cast<std::size_t>(i)] = true;
  }
  const Index n = static_cast<Index>(z_indices.size());
  Matrix z_embed = Matrix::Zero(total, n);
  for (Index c = 0; c < n; ++c) z_embed(z_indices[static_cast<std::size_t>(c)], c) = 1;
  Matrix complement = Matrix::Zero(total - n, total);
  Index row = 0;
  for (Index i = 0; i < total; ++i)
    if (!in_z[static_cast<std::size_t>(i)]) complement(row++, i) = 1;
  return {e, std::move(z_embed), std::move(complement)};
}

CheckReport verify_datum(const ExtendingDatum& d) {
  d.validate();
  const Index n = d.dimZ();
  const Index m = d.dimV;
  const Algebra& z = d.base;

  auto M = [&](const Vector& x, const Vector& y) { return z(x, y); };
  auto L = [&](const Vector& u, const Vector& x) { return d.actL(u, x); };
  auto R = [&](const Vector& x, const Vector& u) { return d.actR(x, u); };
  auto PL = [&](const Vector& x, const Vector& u) { return d.projL(x, u); };
  auto PR = [&](const Vector& u, const Vector& x) { return d.projR(u, x); };
  auto W = [&](const Vector& u, const Vector& v) { return d.omega(u, v); };
  auto S = [&](const Vector& u, const Vector& v) { return d.star(u, v); };

  CheckReport report = is_zinbiel(z);
  report.results.front().label = "Zinbiel(Z)";
  auto& out = report.results;
  using E = std::vector<Vector>;

  out.push_back(check_on_basis("Z1(i)", "x,y,w", {n, n, m}, [&](const E& e) {
    const auto &x = e[0], &y = e[1], &w = e[2];
    return Sides{R(M(x, y), w), R(x, Vector(R(y, w) + L(w, y)))};
  }));
  out.push_back(check_on_basis("Z1(ii)", "x,v,z", {n, m, n}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &zz = e[2];
    return Sides{L(R(x, v), zz), R(x, Vector(L(v, zz) + R(zz, v)))};
  }));
  out.push_back(check_on_basis("Z1(iii)", "u,y,z", {m, n, n}, [&](const E& e) {
    const auto &u = e[0], &y = e[1], &zz = e[2];
    return Sides{L(L(u, y), zz), L(u, Vector(M(y, zz) + M(zz, y)))};
  }));
  out.push_back(check_on_basis("Z2", "x,v,y", {n, m, n}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &y = e[2];
    return Sides{M(PL(x, v), y) + PR(R(x, v), y),
                 M(x, Vector(PR(v, y) + PL(y, v))) + PL(x, Vector(L(v, y) + R(y, v)))};
  }));
  out.push_back(check_on_basis("Z3", "u,x,y", {m, n, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1], &y = e[2];
    return Sides{M(PR(u, x), y) + PR(L(u, x), y), PR(u, Vector(M(x, y) + M(y, x)))};
  }));
  out.push_back(check_on_basis("Z4", "u,v,x", {m, m, n}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &x = e[2];
    return Sides{M(W(u, v), x) + PR(S(u, v), x),
                 PR(u, Vector(PR(v, x) + PL(x, v))) + W(u, Vector(L(v, x) + R(x, v)))};
  }));
  out.push_back(check_on_basis("Z5", "u,v,x", {m, m, n}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &x = e[2];
    return Sides{L(S(u, v), x), L(u, Vector(PR(v, x) + PL(x, v))) + S(u, Vector(L(v, x) + R(x, v)))};
  }));
  out.push_back(check_on_basis("Z6", "x,y,w", {n, n, m}, [&](const E& e) {
    const auto &x = e[0], &y = e[1], &w = e[2];
    return Sides{PL(M(x, y), w), M(x, Vector(PL(y, w) + PR(w, y))) + PL(x, Vector(R(y, w) + L(w, y)))};
  }));
  out.push_back(check_on_basis("Z7", "x,v,w", {n, m, m}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &w = e[2];
    return Sides{PL(PL(x, v), w) + W(R(x, v), w),
                 M(x, Vector(W(v, w) + W(w, v))) + PL(x, Vector(S(v, w) + S(w, v)))};
  }));
  out.push_back(check_on_basis("Z8", "x,v,w", {n, m, m}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &w = e[2];
    return Sides{R(PL(x, v), w) + S(R(x, v), w), R(x, Vector(S(v, w) + S(w, v)))};
  }));
  out.push_back(check_on_basis("Z9", "u,x,w", {m, n, m}, [&](const E& e) {
    const auto &u = e[0], &x = e[1], &w = e[2];
    return Sides{PL(PR(u, x), w) + W(L(u, x), w),
                 PR(u, Vector(PL(x, w) + PR(w, x))) + W(u, Vector(L(w, x) + R(x, w)))};
  }));
  out.push_back(check_on_basis("Z10", "u,x,w", {m, n, m}, [&](const E& e) {
    const auto &u = e[0], &x = e[1], &w = e[2];
    return Sides{R(PR(u, x), w) + S(L(u, x), w),
                 L(u, Vector(PL(x, w) + PR(w, x))) + S(u, Vector(R(x, w) + L(w, x)))};
  }));
  out.push_back(check_on_basis("Z11", "u,v,w", {m, m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &w = e[2];
    return Sides{PL(W(u, v), w) + W(S(u, v), w),
                 PR(u, Vector(W(v, w) + W(w, v))) + W(u, Vector(S(v, w) + S(w, v)))};
  }));
  out.push_back(check_on_basis("Z12", "u,v,w", {m, m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &w = e[2];
    return Sides{R(W(u, v), w) + S(S(u, v), w),
                 L(u, Vector(W(v, w) + W(w, v))) + S(u, Vector(S(v, w) + S(w, v)))};
  }));
  return report;
}

Vector unified_product(const ExtendingDatum& d, const Vector& a, const Vector& b) {
  const Index n = d.dimZ();
  const Index m = d.dimV;
  if (a.size() != n + m || b.size() != n + m) throw ShapeError("unified_product: wrong vector length");
  const Vector x = a.head(n), u = a.tail(m);
  const Vector y = b.head(n), v = b.tail(m);
  const Vector zpart = d.base(x, y) + d.projL(x, v) + d.projR(u, y) + d.omega(u, v);
  const Vector vpart = d.actR(x, v) + d.actL(u, y) + d.star(u, v);
  return concat(zpart, vpart);
}

Algebra build_unified(const ExtendingDatum& d, bool force) {
  d.validate();
  if (!force) {
    const CheckReport report = verify_datum(d);
    if (!report.passed())
      throw PreconditionError("build_unified: datum fails " + report.first_failure()->label);
  }
  const Index total = d.dimZ() + d.dimV;
  Algebra e(total);
  for (Index i = 0; i < total; ++i)
    for (Index j = 0; j < total; ++j) e.set(i, j, unified_product(d, unit(total, i), unit(total, j)));
  return e;
}

ExtendingDatum extract_datum(const InclusionPresentation& p) {
  const Algebra& e = p.total;
  const Index total = e.dim;
  const Index n = p.z_embed.cols();
  const Index m = p.complement.rows();
  if (p.z_embed.rows() != total || p.complement.cols() != total)
    throw ShapeError("extract_datum: presentation does not fit the total algebra");
  if (n + m != total) throw PreconditionError("extract_datum: Z and V dimensions do not add up to dim E");

  Matrix basis(total, total);
  basis << p.z_embed, p.complement.transpose();
  if (!is_invertible(basis)) throw PreconditionError("extract_datum: the complement is not complementary to Z");
  if (!subspace_check(e, p.z_embed.transpose(), SubspaceMode::Subalgebra))
    throw PreconditionError("extract_datum: Z is not closed under multiplication");

  // Coordinates relative to [Z basis | V basis]; the head is the projection with kernel V.
  const Matrix to_split = inverse(basis);
  ExtendingDatum d = ExtendingDatum::trivial(restrict_to(e, p.z_embed), m);
  auto x_of = [&](Index i) { return Vector(p.z_embed.col(i)); };
  auto u_of = [&](Index a) { return Vector(p.complement.row(a).transpose()); };
  auto split = [&](const Vector& w) { return Vector(to_split * w); };

  for (Index i = 0; i < n; ++i)
    for (Index a = 0; a < m; ++a) {
      const Vector xu = split(e(x_of(i), u_of(a)));
      d.projL.set_fiber(i, a, xu.head(n));
      d.actR.set_fiber(i, a, xu.tail(m));
      const Vector ux = split(e(u_of(a), x_of(i)));
      d.projR.set_fiber(a, i, ux.head(n));
      d.actL.set_fiber(a, i, ux.tail(m));
    }
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      const Vector uv = split(e(u_of(a), u_of(b)));
      d.omega.set_fiber(a, b, uv.head(n));
      d.star.set_fiber(a, b, uv.tail(m));
    }
  return d;
}

Matrix presentation_map(const InclusionPresentation& p) {
  Matrix map(p.total.dim, p.z_embed.cols() + p.complement.rows());
  map << p.z_embed, p.complement.transpose();
  return map;
}

Matrix morphism_matrix(const MorphismPair& pair) {
  const Index n = pair.r.rows();
  const Index m = pair.s.rows();
  if (pair.r.cols() != m || pair.s.cols() != m) throw ShapeError("morphism pair: r must be Z×V and s must be V×V");
  Matrix psi = Matrix::Zero(n + m, n + m);
  psi.topLeftCorner(n, n) = Matrix::Identity(n, n);
  psi.topRightCorner(n, m) = pair.r;
  psi.bottomRightCorner(m, m) = pair.s;
  return psi;
}

namespace {

void check_pair_shapes(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair) {
  d.validate();
  d2.validate();
  if (d.dimZ() != d2.dimZ() || d.dimV != d2.dimV || !(d.base == d2.base))
    throw PreconditionError("the two datums must share the base algebra and dim V");
  if (pair.r.rows() != d.dimZ() || pair.r.cols() != d.dimV || pair.s.rows() != d.dimV ||
      pair.s.cols() != d.dimV)
    throw ShapeError("morphism pair: r must be dim Z × dim V and s must be dim V × dim V");
}

}  // namespace

CheckReport is_morphism_pair(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair) {
  check_pair_shapes(d, d2, pair);
  const Index n = d.dimZ();
  const Index m = d.dimV;
  const Matrix& r = pair.r;
  const Matrix& s = pair.s;
  auto M = [&](const Vector& x, const Vector& y) { return d.base(x, y); };
  using E = std::vector<Vector>;

  CheckReport report;
  auto& out = report.results;
  out.push_back(check_on_basis("M1", "x,u", {n, m}, [&](const E& e) {
    const auto &x = e[0], &u = e[1];
    return Sides{s * d.actR(x, u), d2.actR(x, Vector(s * u))};
  }));
  out.push_back(check_on_basis("M2", "u,x", {m, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1];
    return Sides{s * d.actL(u, x), d2.actL(Vector(s * u), x)};
  }));
  out.push_back(check_on_basis("M3", "u,x", {m, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1];
    return Sides{d.projR(u, x) + r * d.actL(u, x), M(Vector(r * u), x) + d2.projR(Vector(s * u), x)};
  }));
  out.push_back(check_on_basis("M4", "x,u", {n, m}, [&](const E& e) {
    const auto &x = e[0], &u = e[1];
    return Sides{d.projL(x, u) + r * d.actR(x, u), M(x, Vector(r * u)) + d2.projL(x, Vector(s * u))};
  }));
  out.push_back(check_on_basis("M5", "u,v", {m, m}, [&](const E& e) {
    const Vector ru = r * e[0], rv = r * e[1], su = s * e[0], sv = s * e[1];
    return Sides{s * d.star(e[0], e[1]), d2.actR(ru, sv) + d2.actL(su, rv) + d2.star(su, sv)};
  }));
  out.push_back(check_on_basis("M6", "u,v", {m, m}, [&](const E& e) {
    const Vector ru = r * e[0], rv = r * e[1], su = s * e[0], sv = s * e[1];
    return Sides{d.omega(e[0], e[1]) + r * d.star(e[0], e[1]),
                 M(ru, rv) + d2.projL(ru, sv) + d2.projR(su, rv) + d2.omega(su, sv)};
  }));

  const bool direct = is_homomorphism(build_unified(d, true), build_unified(d2, true), morphism_matrix(pair)).passed();
  if (direct != report.passed())
    throw ConsistencyError("is_morphism_pair: M1-M6 and the homomorphism check disagree");
  return report;
}

CheckReport equivalence_report(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair) {
  check_pair_shapes(d, d2, pair);
  const Index n = d.dimZ();
  const Index m = d.dimV;
  const Matrix& r = pair.r;
  const Matrix& s = pair.s;
  const Matrix s_inv = inverse(s);
  auto M = [&](const Vector& x, const Vector& y) { return d.base(x, y); };
  using E = std::vector<Vector>;

  CheckReport report;
  auto& out = report.results;
  out.push_back(check_on_basis("actL", "u,x", {m, n}, [&](const E& e) {
    return Sides{d.actL(e[0], e[1]), s_inv * d2.actL(Vector(s * e[0]), e[1])};
  }));
  out.push_back(check_on_basis("actR", "x,u", {n, m}, [&](const E& e) {
    return Sides{d.actR(e[0], e[1]), s_inv * d2.actR(e[0], Vector(s * e[1]))};
  }));
  out.push_back(check_on_basis("projR", "u,x", {m, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1];
    const Vector su = s * u;
    return Sides{d.projR(u, x), M(Vector(r * u), x) + d2.projR(su, x) - r * s_inv * d2.actL(su, x)};
  }));
  out.push_back(check_on_basis("projL", "x,u", {n, m}, [&](const E& e) {
    const auto &x = e[0], &u = e[1];
    const Vector su = s * u;
    return Sides{d.projL(x, u), M(x, Vector(r * u)) + d2.projL(x, su) - r * s_inv * d2.actR(x, su)};
  }));
  auto inner = [&](const Vector& u, const Vector& v) {
    const Vector ru = r * u, rv = r * v, su = s * u, sv = s * v;
    return Vector(d2.actR(ru, sv) + d2.actL(su, rv) + d2.star(su, sv));
  };
  out.push_back(check_on_basis("star", "u,v", {m, m}, [&](const E& e) {
    return Sides{d.star(e[0], e[1]), s_inv * inner(e[0], e[1])};
  }));
  out.push_back(check_on_basis("omega", "u,v", {m, m}, [&](const E& e) {
    const Vector ru = r * e[0], rv = r * e[1], su = s * e[0], sv = s * e[1];
    return Sides{d.omega(e[0], e[1]), M(ru, rv) + d2.projL(ru, sv) + d2.projR(su, rv) + d2.omega(su, sv) -
                                          r * s_inv * inner(e[0], e[1])};
  }));
  return report;
}

bool datums_equivalent(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair) {
  return equivalence_report(d, d2, pair).passed();
}

CheckReport cohomology_report(const ExtendingDatum& d, const ExtendingDatum& d2, const Matrix& r) {
  const MorphismPair pair{r, Matrix::Identity(d.dimV, d.dimV)};
  check_pair_shapes(d, d2, pair);
  if (!(d.actL == d2.actL) || !(d.actR == d2.actR))
    throw PreconditionError("datums_cohomologous: the actions ◁ and ▷ of the two datums must coincide");
  const Index n = d.dimZ();
  const Index m = d.dimV;
  auto M = [&](const Vector& x, const Vector& y) { return d.base(x, y); };
  using E = std::vector<Vector>;

  CheckReport report;
  auto& out = report.results;
  out.push_back(check_on_basis("projR", "u,x", {m, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1];
    return Sides{d.projR(u, x), M(Vector(r * u), x) + d2.projR(u, x) - r * d2.actL(u, x)};
  }));
  out.push_back(check_on_basis("projL", "x,u", {n, m}, [&](const E& e) {
    const auto &x = e[0], &u = e[1];
    return Sides{d.projL(x, u), M(x, Vector(r * u)) + d2.projL(x, u) - r * d2.actR(x, u)};
  }));
  auto inner = [&](const Vector& u, const Vector& v) {
    return Vector(d2.actR(Vector(r * u), v) + d2.actL(u, Vector(r * v)) + d2.star(u, v));
  };
  out.push_back(check_on_basis("star", "u,v", {m, m}, [&](const E& e) {
    return Sides{d.star(e[0], e[1]), inner(e[0], e[1])};
  }));
  out.push_back(check_on_basis("omega", "u,v", {m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1];
    const Vector ru = r * u, rv = r * v;
    return Sides{d.omega(u, v),
                 M(ru, rv) + d2.projL(ru, v) + d2.projR(u, rv) + d2.omega(u, v) - r * inner(u, v)};
  }));
  return report;
}

bool datums_cohomologous(const ExtendingDatum& d, const ExtendingDatum& d2, const Matrix& r) {
  return cohomology_report(d, d2, r).passed();
}

MorphismPair inverse_pair(const MorphismPair& pair) {
  const Matrix s_inv = inverse(pair.s);
  return {Matrix(-pair.r * s_inv), s_inv};
}

ExtendingDatum pull_back(const ExtendingDatum& d2, const MorphismPair& pair) {
  d2.validate();
  const Matrix psi = morphism_matrix(pair);
  if (psi.rows() != d2.dimZ() + d2.dimV) throw ShapeError("pull_back: pair does not fit the datum");
  const Algebra transported = change_of_basis(build_unified(d2, true), psi);
  std::vector<Index> z(static_cast<std::size_t>(d2.dimZ()));
  for (Index i = 0; i < d2.dimZ(); ++i) z[static_cast<std::size_t>(i)] = i;
  ExtendingDatum d = extract_datum(coordinate_presentation(transported, z));
  d.base = d2.base;
  return d;
}

}  // namespace zinbiel
