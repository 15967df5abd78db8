#include "zinbiel/flag.hpp"

namespace zinbiel {

namespace {

using Sides = std::pair<Vector, Vector>;
using E = std::vector<Vector>;

Rational apply(const RowVector& mu, const Vector& x) { return (mu * x)(0); }

// Residual vector of the reduced linear conditions for a candidate map m.
Vector reduced_residual(const Algebra& z, const RowVector& mu, FlagMode mode, const Matrix& m) {
  const Index n = z.dim;
  std::vector<Vector> parts;
  for (Index i = 0; i < n; ++i) parts.push_back(scalar_vector(apply(mu, Vector(m * unit(n, i)))));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector x = unit(n, i), y = unit(n, j);
      const Vector mx = m * x, my = m * y;
      if (mode == FlagMode::D) {
        parts.push_back(m * z(x, y) - z(mx, y) - apply(mu, x) * my + m * z(y, x));
        parts.push_back(z(x, my));
      } else {
        parts.push_back(m * z(x, y) - z(mx, y));
        parts.push_back(z(mx, y) - z(x, my) - apply(mu, y) * mx);
      }
    }
  Index total = 0;
  for (const auto& p : parts) total += p.size();
  Vector out(total);
  Index at = 0;
  for (const auto& p : parts) {
    out.segment(at, p.size()) = p;
    at += p.size();
  }
  return out;
}

}  // namespace

FlagDatum FlagDatum::zero(const Algebra& base) {
  const Index n = base.dim;
  return {base, Vector::Zero(n), Rational(0), RowVector::Zero(n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
}

void FlagDatum::validate() const {
  const Index n = base.dim;
  if (x0.size() != n || mu.size() != n || D.rows() != n || D.cols() != n || T.rows() != n || T.cols() != n)
    throw ShapeError("flag datum: x0, mu, D and T must match the dimension of the base");
}

Matrix SolutionFamily::at(std::span<const Rational> t) const {
  if (t.size() != linear_basis.size()) throw ShapeError("solution family: wrong number of parameters");
  if (linear_basis.empty()) throw ShapeError("solution family: empty basis has no shape");
  Matrix m = Matrix::Zero(linear_basis.front().rows(), linear_basis.front().cols());
  for (std::size_t i = 0; i < t.size(); ++i) m += t[i] * linear_basis[i];
  return m;
}

CheckReport mu_report(const Algebra& z, const RowVector& mu) {
  if (mu.size() != z.dim) throw ShapeError("mu must have one entry per basis vector");
  const Index n = z.dim;
  CheckReport report;
  report.results.push_back(check_on_basis("F1", "x,y", {n, n}, [&](const E& e) {
    const auto &x = e[0], &y = e[1];
    return Sides{scalar_vector(apply(mu, z(x, y))), scalar_vector(apply(mu, y) * apply(mu, x) - apply(mu, z(y, x)))};
  }));
  return report;
}

CheckReport verify_flag(const FlagDatum& fd) {
  fd.validate();
  const Index n = fd.base.dim;
  const Algebra& z = fd.base;
  const Matrix& D = fd.D;
  const Matrix& T = fd.T;
  const Vector& x0 = fd.x0;
  const Rational& k0 = fd.k0;
  auto mu = [&](const Vector& x) { return apply(fd.mu, x); };

  CheckReport report = is_zinbiel(z);
  report.results.front().label = "Zinbiel(Z)";
  report.append(mu_report(z, fd.mu));
  auto& out = report.results;

  out.push_back(check_on_basis("F2", "x", {n}, [&](const E& e) {
    return Sides{scalar_vector(mu(Vector(D * e[0] + T * e[0]))), scalar_vector(0)};
  }));
  out.push_back(check_on_basis("F3", "x,y", {n, n}, [&](const E& e) {
    const auto &x = e[0], &y = e[1];
    return Sides{D * z(x, y), z(Vector(D * x), y) + mu(x) * D * y - D * z(y, x)};
  }));
  out.push_back(check_on_basis("F4(i)", "x,y", {n, n}, [&](const E& e) {
    const auto &x = e[0], &y = e[1];
    return Sides{T * z(x, y), z(Vector(T * x), y)};
  }));
  out.push_back(check_on_basis("F4(ii)", "x,y", {n, n}, [&](const E& e) {
    const auto &x = e[0], &y = e[1];
    return Sides{z(Vector(T * x), y), z(x, Vector(D * y + T * y)) + mu(y) * T * x};
  }));
  out.push_back(check_on_basis("F5", "x", {n}, [&](const E& e) {
    const auto& x = e[0];
    return Sides{T * T * x, Rational(2) * z(x, x0) + Rational(2) * k0 * T * x};
  }));
  out.push_back(check_on_basis("F6", "x", {n}, [&](const E& e) {
    const auto& x = e[0];
    return Sides{D * D * x, T * D * x - D * T * x};
  }));
  out.push_back(check_on_basis("F7", "x", {n}, [&](const E& e) {
    const auto& x = e[0];
    return Sides{T * D * x, z(x0, x) + k0 * D * x - mu(x) * x0};
  }));
  out.push_back(check_on_basis("F8(i)", "", {}, [&](const E&) {
    return Sides{T * x0, Rational(2) * D * x0 + k0 * x0};
  }));
  out.push_back(check_on_basis("F8(ii)", "", {}, [&](const E&) {
    return Sides{scalar_vector(0), scalar_vector(Rational(2) * mu(x0) + k0 * k0)};
  }));
  return report;
}

ExtendingDatum flag_to_datum(const FlagDatum& fd) {
  fd.validate();
  const Index n = fd.base.dim;
  ExtendingDatum d = ExtendingDatum::trivial(fd.base, 1);
  for (Index i = 0; i < n; ++i) {
    d.actL(0, i, 0) = fd.mu(i);
    d.projR.set_fiber(0, i, fd.D.col(i));
    d.projL.set_fiber(i, 0, fd.T.col(i));
  }
  d.omega.set_fiber(0, 0, fd.x0);
  d.star(0, 0, 0) = fd.k0;
  return d;
}

FlagExtension build_flag_extension(const FlagDatum& fd) {
  const CheckReport report = verify_flag(fd);
  if (!report.passed())
    throw PreconditionError("build_flag_extension: flag datum fails " + report.first_failure()->label);
  ExtendingDatum d = flag_to_datum(fd);
  if (!verify_datum(d).passed())
    throw ConsistencyError("build_flag_extension: flag conditions pass but the datum conditions fail");
  Algebra e = build_unified(d, true);
  return {std::move(d), std::move(e)};
}

SolutionFamily solve_reduced(const Algebra& z, const RowVector& mu, FlagMode mode) {
  const CheckReport f1 = mu_report(z, mu);
  if (!f1.passed()) throw PreconditionError("solve_reduced: mu violates F1 for this algebra");

  const Index n = z.dim;
  // Column p of the system is the residual of the elementary map with a_ij = 1, p = i·n + j.
  std::vector<Vector> columns;
  std::vector<Matrix> elementary;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(j, i) = 1;
      columns.push_back(reduced_residual(z, mu, mode, m));
      elementary.push_back(std::move(m));
    }
  SolutionFamily family;
  if (n == 0) return family;
  Matrix system(columns.front().size(), static_cast<Index>(columns.size()));
  for (std::size_t p = 0; p < columns.size(); ++p) system.col(static_cast<Index>(p)) = columns[p];

  for (const Vector& v : nullspace(system)) {
    Matrix m = Matrix::Zero(n, n);
    for (Index p = 0; p < v.size(); ++p) m += v(p) * elementary[static_cast<std::size_t>(p)];
    family.linear_basis.push_back(std::move(m));
  }
  family.residuals = poly_expand_quadratic(family.linear_basis, QuadraticConstraint::SquareIsZero);
  return family;
}

std::vector<Poly> mu_constraints(const Algebra& z) {
  const Index n = z.dim;
  const auto names = indexed_names("mu", static_cast<std::size_t>(n));
  auto mu = [&](Index k) { return Poly::variable(names, static_cast<std::size_t>(k)); };
  std::vector<Poly> polys;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Poly p = Poly(names) - mu(i) * mu(j);
      const Vector sym = z(unit(n, i), unit(n, j)) + z(unit(n, j), unit(n, i));
      for (Index k = 0; k < n; ++k) p += sym(k) * mu(k);
      polys.push_back(std::move(p));
    }
  return canonical_polynomial_set(std::move(polys));
}

CheckReport flag_equivalence_report(const FlagDatum& fd, const FlagDatum& fd2, const FlagEquivalenceWitness& w) {
  fd.validate();
  fd2.validate();
  if (!(fd.base == fd2.base)) throw PreconditionError("flag_equivalent: the two flag datums need the same base");
  if (w.q == 0) throw PreconditionError("flag_equivalent: q must be nonzero");
  const Index n = fd.base.dim;
  if (w.r_vec.size() != n) throw ShapeError("flag_equivalent: r must be a vector of the base");
  const Algebra& z = fd.base;
  const Vector& r = w.r_vec;
  const Rational& q = w.q;

  CheckReport report;
  auto& out = report.results;
  out.push_back(check_on_basis("mu", "x", {n}, [&](const E& e) {
    return Sides{scalar_vector(apply(fd.mu, e[0])), scalar_vector(apply(fd2.mu, e[0]))};
  }));
  out.push_back(check_on_basis("D", "x", {n}, [&](const E& e) {
    const auto& x = e[0];
    return Sides{fd.D * x, q * fd2.D * x + z(r, x) - apply(fd.mu, x) * r};
  }));
  out.push_back(check_on_basis("T", "x", {n}, [&](const E& e) {
    const auto& x = e[0];
    return Sides{fd.T * x, q * fd2.T * x + z(x, r)};
  }));
  out.push_back(check_on_basis("k0", "", {}, [&](const E&) {
    return Sides{scalar_vector(fd.k0), scalar_vector(q * fd2.k0 + apply(fd2.mu, r))};
  }));
  out.push_back(check_on_basis("x0", "", {}, [&](const E&) {
    return Sides{fd.x0, q * q * fd2.x0 + z(r, r) - fd.k0 * r + q * fd2.T * r + q * fd2.D * r};
  }));
  return report;
}

bool flag_equivalent(const FlagDatum& fd, const FlagDatum& fd2, const FlagEquivalenceWitness& w) {
  const bool specialized = flag_equivalence_report(fd, fd2, w).passed();
  Matrix r(fd.base.dim, 1);
  r.col(0) = w.r_vec;
  Matrix s(1, 1);
  s(0, 0) = w.q;
  const bool general = datums_equivalent(flag_to_datum(fd), flag_to_datum(fd2), MorphismPair{r, s});
  if (specialized != general)
    throw ConsistencyError("flag_equivalent: flag relations and datum equivalence disagree");
  return specialized;
}

FlagDatum flag_transport(const FlagDatum& fd2, const FlagEquivalenceWitness& w) {
  fd2.validate();
  if (w.q == 0) throw PreconditionError("flag_transport: q must be nonzero");
  const Index n = fd2.base.dim;
  if (w.r_vec.size() != n) throw ShapeError("flag_transport: r must be a vector of the base");
  const Algebra& z = fd2.base;
  const Vector& r = w.r_vec;
  const Rational& q = w.q;

  FlagDatum fd = fd2;
  fd.k0 = q * fd2.k0 + apply(fd2.mu, r);
  fd.x0 = q * q * fd2.x0 + z(r, r) - fd.k0 * r + q * fd2.T * r + q * fd2.D * r;
  for (Index i = 0; i < n; ++i) {
    const Vector x = unit(n, i);
    fd.D.col(i) = q * fd2.D * x + z(r, x) - apply(fd2.mu, x) * r;
    fd.T.col(i) = q * fd2.T * x + z(x, r);
  }
  return fd;
}

}  // namespace zinbiel
