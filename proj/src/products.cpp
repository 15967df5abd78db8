#include "zinbiel/products.hpp"

namespace zinbiel {

namespace {

using Sides = std::pair<Vector, Vector>;
using E = std::vector<Vector>;

Vector concat(const Vector& z, const Vector& v) {
  Vector out(z.size() + v.size());
  out << z, v;
  return out;
}

void relabel_zinbiel(CheckReport& report, const std::string& label) { report.results.front().label = label; }

// Assembles the algebra on Z ⊕ W from a product of (z, w) pairs.
template <typename Product>
Algebra assemble(Index n, Index m, Product&& product) {
  Algebra e(n + m);
  for (Index i = 0; i < n + m; ++i)
    for (Index j = 0; j < n + m; ++j) {
      const Vector a = unit(n + m, i);
      const Vector b = unit(n + m, j);
      e.set(i, j, product(Vector(a.head(n)), Vector(a.tail(m)), Vector(b.head(n)), Vector(b.tail(m))));
    }
  return e;
}

// Lexicographic order on the images r(f_1), r(f_2), ... (columns in turn).
bool canonical_less(const Matrix& a, const Matrix& b) {
  for (Index c = 0; c < a.cols(); ++c)
    for (Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
  return false;
}

// Calls visit(m) for every rows×cols matrix with entries in coeffs (sorted, unique),
// in canonical order.
template <typename Visit>
void for_each_grid_matrix(Index rows, Index cols, std::vector<Rational> coeffs, std::size_t budget, Visit&& visit) {
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  if (coeffs.empty()) return;
  const std::size_t cells = static_cast<std::size_t>(rows * cols);
  std::size_t points = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    points *= coeffs.size();
    if (points > budget) throw PreconditionError("grid search exceeds the configured budget");
  }
  std::vector<std::size_t> digit(cells, 0);
  Matrix m(rows, cols);
  while (true) {
    // Column-major cell order matches canonical_less, with the last cell fastest.
    for (std::size_t c = 0; c < cells; ++c)
      m(static_cast<Index>(c) % rows, static_cast<Index>(c) / rows) = coeffs[digit[c]];
    visit(m);
    std::size_t slot = cells;
    while (slot > 0) {
      --slot;
      if (++digit[slot] < coeffs.size()) break;
      digit[slot] = 0;
      if (slot == 0) return;
    }
    if (cells == 0) return;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Bimodules and semidirect products

Bimodule Bimodule::regular(const Algebra& z) { return {z, z.dim, z.mult, z.mult}; }

void Bimodule::validate() const {
  const Index n = base.dim;
  if (!actR.has_dims(n, dimV, dimV)) throw ShapeError("bimodule: actR must be Z×V→V");
  if (!actL.has_dims(dimV, n, dimV)) throw ShapeError("bimodule: actL must be V×Z→V");
}

CheckReport is_bimodule(const Bimodule& b) {
  b.validate();
  const Index n = b.base.dim;
  const Index m = b.dimV;
  auto M = [&](const Vector& x, const Vector& y) { return b.base(x, y); };
  auto R = [&](const Vector& x, const Vector& v) { return b.actR(x, v); };
  auto L = [&](const Vector& v, const Vector& x) { return b.actL(v, x); };

  CheckReport report = is_zinbiel(b.base);
  relabel_zinbiel(report, "Zinbiel(Z)");
  report.results.push_back(check_on_basis("BM1", "x,y,v", {n, n, m}, [&](const E& e) {
    const auto &x = e[0], &y = e[1], &v = e[2];
    return Sides{R(M(x, y), v), R(x, Vector(R(y, v) + L(v, y)))};
  }));
  report.results.push_back(check_on_basis("BM2", "v,x,y", {m, n, n}, [&](const E& e) {
    const auto &v = e[0], &x = e[1], &y = e[2];
    return Sides{L(L(v, x), y), L(v, Vector(M(x, y) + M(y, x)))};
  }));
  report.results.push_back(check_on_basis("BM3", "x,v,y", {n, m, n}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &y = e[2];
    return Sides{L(R(x, v), y), R(x, Vector(L(v, y) + R(y, v)))};
  }));
  return report;
}

Algebra semidirect(const Bimodule& b) {
  const CheckReport report = is_bimodule(b);
  if (!report.passed()) throw PreconditionError("semidirect: not a bimodule (" + report.first_failure()->label + ")");
  return assemble(b.base.dim, b.dimV, [&](const Vector& x, const Vector& u, const Vector& y, const Vector& v) {
    return concat(b.base(x, y), Vector(b.actR(x, v) + b.actL(u, y)));
  });
}

ExtendingDatum as_datum(const Bimodule& b) {
  b.validate();
  ExtendingDatum d = ExtendingDatum::trivial(b.base, b.dimV);
  d.actR = b.actR;
  d.actL = b.actL;
  return d;
}

// ---------------------------------------------------------------------------
// Crossed products

CrossedSystem CrossedSystem::trivial(const Algebra& z, const Algebra& w) {
  const Index n = z.dim;
  const Index m = w.dim;
  return {z, w, Tensor(m, n, n), Tensor(n, m, n), Tensor(m, m, n)};
}

void CrossedSystem::validate() const {
  const Index n = base.dim;
  const Index m = top.dim;
  if (!projR.has_dims(m, n, n)) throw ShapeError("crossed system: projR must be W×Z→Z");
  if (!projL.has_dims(n, m, n)) throw ShapeError("crossed system: projL must be Z×W→Z");
  if (!omega.has_dims(m, m, n)) throw ShapeError("crossed system: omega must be W×W→Z");
}

ExtendingDatum as_datum(const CrossedSystem& cs) {
  cs.validate();
  ExtendingDatum d = ExtendingDatum::trivial(cs.base, cs.top.dim);
  d.projR = cs.projR;
  d.projL = cs.projL;
  d.omega = cs.omega;
  d.star = cs.top.mult;
  return d;
}

Checked<Algebra> crossed(const CrossedSystem& cs) {
  cs.validate();
  const Index n = cs.base.dim;
  const Index m = cs.top.dim;
  auto M = [&](const Vector& x, const Vector& y) { return cs.base(x, y); };
  auto N = [&](const Vector& u, const Vector& v) { return cs.top(u, v); };
  auto PL = [&](const Vector& x, const Vector& u) { return cs.projL(x, u); };
  auto PR = [&](const Vector& u, const Vector& x) { return cs.projR(u, x); };
  auto W = [&](const Vector& u, const Vector& v) { return cs.omega(u, v); };

  CheckReport report = is_zinbiel(cs.base);
  relabel_zinbiel(report, "Zinbiel(Z)");
  CheckReport top = is_zinbiel(cs.top);
  relabel_zinbiel(top, "Zinbiel(W)");
  report.append(top);
  auto& out = report.results;

  out.push_back(check_on_basis("CS1", "x,v,y", {n, m, n}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &y = e[2];
    return Sides{M(PL(x, v), y), M(x, Vector(PR(v, y) + PL(y, v)))};
  }));
  out.push_back(check_on_basis("CS2", "u,x,y", {m, n, n}, [&](const E& e) {
    const auto &u = e[0], &x = e[1], &y = e[2];
    return Sides{M(PR(u, x), y), PR(u, M(x, y)) + PR(u, M(y, x))};
  }));
  out.push_back(check_on_basis("CS3", "u,v,x", {m, m, n}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &x = e[2];
    return Sides{M(W(u, v), x) + PR(N(u, v), x), PR(u, Vector(PR(v, x) + PL(x, v)))};
  }));
  out.push_back(check_on_basis("CS4", "x,y,w", {n, n, m}, [&](const E& e) {
    const auto &x = e[0], &y = e[1], &w = e[2];
    return Sides{PL(M(x, y), w), M(x, Vector(PL(y, w) + PR(w, y)))};
  }));
  out.push_back(check_on_basis("CS5", "x,v,w", {n, m, m}, [&](const E& e) {
    const auto &x = e[0], &v = e[1], &w = e[2];
    return Sides{PL(PL(x, v), w), M(x, Vector(W(v, w) + W(w, v))) + PL(x, Vector(N(v, w) + N(w, v)))};
  }));
  out.push_back(check_on_basis("CS6", "u,x,w", {m, n, m}, [&](const E& e) {
    const auto &u = e[0], &x = e[1], &w = e[2];
    return Sides{PL(PR(u, x), w), PR(u, Vector(PL(x, w) + PR(w, x)))};
  }));
  out.push_back(check_on_basis("CS7", "u,v,w", {m, m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1], &w = e[2];
    return Sides{PL(W(u, v), w) + W(N(u, v), w),
                 PR(u, Vector(W(v, w) + W(w, v))) + W(u, Vector(N(v, w) + N(w, v)))};
  }));

  Algebra product = assemble(n, m, [&](const Vector& x, const Vector& u, const Vector& y, const Vector& v) {
    return concat(Vector(M(x, y) + PL(x, v) + PR(u, y) + W(u, v)), N(u, v));
  });
  return {std::move(report), std::move(product)};
}

// ---------------------------------------------------------------------------
// Matched pairs and bicrossed products

MatchedPair MatchedPair::trivial(const Algebra& z, const Algebra& w) {
  const Index n = z.dim;
  const Index m = w.dim;
  return {z, w, Tensor(m, n, m), Tensor(m, n, n), Tensor(n, m, n), Tensor(n, m, m)};
}

void MatchedPair::validate() const {
  const Index n = base.dim;
  const Index m = top.dim;
  if (!actL.has_dims(m, n, m)) throw ShapeError("matched pair: actL must be W×Z→W");
  if (!projR.has_dims(m, n, n)) throw ShapeError("matched pair: projR must be W×Z→Z");
  if (!projL.has_dims(n, m, n)) throw ShapeError("matched pair: projL must be Z×W→Z");
  if (!actR.has_dims(n, m, m)) throw ShapeError("matched pair: actR must be Z×W→W");
}

ExtendingDatum as_datum(const MatchedPair& mp) {
  mp.validate();
  ExtendingDatum d = ExtendingDatum::trivial(mp.base, mp.top.dim);
  d.actL = mp.actL;
  d.actR = mp.actR;
  d.projL = mp.projL;
  d.projR = mp.projR;
  d.star = mp.top.mult;
  return d;
}

Checked<Algebra> bicrossed(const MatchedPair& mp) {
  CheckReport report = verify_datum(as_datum(mp));
  report.notes.push_back(
      "conditions are the datum conditions Z1-Z12 at omega = 0 and star = multiplication of W; "
      "map signatures follow the bicrossed product formula: actL W×Z→W, projR W×Z→Z, projL Z×W→Z, actR Z×W→W");
  const Index n = mp.base.dim;
  const Index m = mp.top.dim;
  Algebra product = assemble(n, m, [&](const Vector& x, const Vector& u, const Vector& y, const Vector& v) {
    return concat(Vector(mp.base(x, y) + mp.projL(x, v) + mp.projR(u, y)),
                  Vector(mp.actR(x, v) + mp.actL(u, y) + mp.top(u, v)));
  });
  return {std::move(report), std::move(product)};
}

MatchedPair factorization_extract(const Algebra& e, const Matrix& z_basis, const Matrix& w_basis) {
  if (!subspace_check(e, z_basis, SubspaceMode::Subalgebra))
    throw PreconditionError("factorization_extract: Z is not a subalgebra");
  if (!subspace_check(e, w_basis, SubspaceMode::Subalgebra))
    throw PreconditionError("factorization_extract: W is not a subalgebra");
  const InclusionPresentation p{e, z_basis.transpose(), w_basis};
  const ExtendingDatum d = extract_datum(p);
  if (!d.omega.is_zero()) throw ConsistencyError("factorization_extract: cocycle of a closed complement is nonzero");
  const Algebra w = restrict_to(e, w_basis.transpose());
  if (!(d.star == w.mult)) throw ConsistencyError("factorization_extract: W product does not match the V part");
  return {d.base, w, d.actL, d.projR, d.projL, d.actR};
}

// ---------------------------------------------------------------------------
// Deformation maps

namespace {

void check_deformation_shape(const MatchedPair& mp, const Matrix& r) {
  mp.validate();
  if (r.rows() != mp.base.dim || r.cols() != mp.top.dim)
    throw ShapeError("deformation map: r must be dim Z × dim W");
}

}  // namespace

CheckReport deformation_report(const MatchedPair& mp, const Matrix& r) {
  check_deformation_shape(mp, r);
  const Index m = mp.top.dim;
  CheckReport report;
  report.results.push_back(check_on_basis("deformation", "u,v", {m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1];
    const Vector ru = r * u, rv = r * v;
    return Sides{r * mp.top(u, v) - mp.base(ru, rv),
                 mp.projR(u, rv) + mp.projL(ru, v) - r * (mp.actL(u, rv) + mp.actR(ru, v))};
  }));
  return report;
}

bool is_deformation_map(const MatchedPair& mp, const Matrix& r) { return deformation_report(mp, r).passed(); }

Matrix deformation_graph(const MatchedPair& mp, const Matrix& r) {
  check_deformation_shape(mp, r);
  const Index n = mp.base.dim;
  const Index m = mp.top.dim;
  Matrix rows(m, n + m);
  rows << r.transpose(), Matrix::Identity(m, m);
  return rows;
}

Algebra r_deform(const MatchedPair& mp, const Matrix& r) {
  if (!is_deformation_map(mp, r)) throw PreconditionError("r_deform: r is not a deformation map");
  const Index n = mp.base.dim;
  const Index m = mp.top.dim;

  Algebra deformed(m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const Vector u = unit(m, i), v = unit(m, j);
      deformed.set(i, j, Vector(mp.top(u, v) + mp.actL(u, Vector(r * v)) + mp.actR(Vector(r * u), v)));
    }

  const Matrix graph = deformation_graph(mp, r);
  const Algebra product = bicrossed(mp).value;
  Matrix z_and_graph(n + m, n + m);
  z_and_graph << Matrix::Identity(n, n), Matrix::Zero(n, m), graph;
  if (!subspace_check(product, graph, SubspaceMode::Subalgebra) || !is_invertible(z_and_graph))
    throw ConsistencyError("r_deform: graph of a deformation map is not a subalgebra complement");
  return deformed;
}

CheckReport deformation_equivalence_report(const MatchedPair& mp, const Matrix& r, const Matrix& R,
                                           const DeformationWitness& w) {
  check_deformation_shape(mp, r);
  check_deformation_shape(mp, R);
  const Index m = mp.top.dim;
  const Matrix& sigma = w.sigma;
  if (sigma.rows() != m || sigma.cols() != m) throw ShapeError("deformations_equivalent: sigma must be dim W × dim W");
  if (!is_invertible(sigma)) throw SingularMatrixError("deformations_equivalent: sigma is singular");
  if (!is_deformation_map(mp, r) || !is_deformation_map(mp, R))
    throw PreconditionError("deformations_equivalent: r and R must be deformation maps");

  CheckReport report;
  report.results.push_back(check_on_basis("equivalence", "u,v", {m, m}, [&](const E& e) {
    const auto &u = e[0], &v = e[1];
    const Vector su = sigma * u, sv = sigma * v;
    return Sides{sigma * mp.top(u, v) - mp.top(su, sv),
                 mp.actL(su, Vector(R * sv)) + mp.actR(Vector(R * su), sv) - sigma * mp.actL(u, Vector(r * v)) -
                     sigma * mp.actR(Vector(r * u), v)};
  }));
  const bool direct = is_homomorphism(r_deform(mp, r), r_deform(mp, R), sigma).passed();
  if (direct != report.passed())
    throw ConsistencyError("deformations_equivalent: relation and homomorphism check disagree");
  return report;
}

bool deformations_equivalent(const MatchedPair& mp, const Matrix& r, const Matrix& R, const DeformationWitness& w) {
  return deformation_equivalence_report(mp, r, R, w).passed();
}

std::vector<Matrix> search_deformation_maps(const MatchedPair& mp, std::vector<Rational> coeffs, std::size_t budget) {
  mp.validate();
  std::vector<Matrix> found;
  for_each_grid_matrix(mp.base.dim, mp.top.dim, std::move(coeffs), budget, [&](const Matrix& r) {
    if (is_deformation_map(mp, r)) found.push_back(r);
  });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Matrix> search_deformation_equivalences(const MatchedPair& mp, const Matrix& r, const Matrix& R,
                                                    std::vector<Rational> coeffs, std::size_t budget) {
  mp.validate();
  std::vector<Matrix> found;
  const Index m = mp.top.dim;
  for_each_grid_matrix(m, m, std::move(coeffs), budget, [&](const Matrix& sigma) {
    if (is_invertible(sigma) && deformations_equivalent(mp, r, R, DeformationWitness{sigma})) found.push_back(sigma);
  });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace zinbiel
