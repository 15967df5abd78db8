#include "zinbiel/algebra.hpp"

#include <sstream>

namespace zinbiel {

Algebra::Algebra(Index n, Tensor constants, std::vector<std::string> labels)
    : dim(n), mult(std::move(constants)), names(std::move(labels)) {
  if (!mult.has_dims(n, n, n)) throw ShapeError("Algebra: structure tensor must be n×n×n");
  if (!names.empty() && static_cast<Index>(names.size()) != n)
    throw ShapeError("Algebra: wrong number of basis names");
}

Algebra& Algebra::set(Index i, Index j, const Vector& value) {
  mult.set_fiber(i, j, value);
  return *this;
}

Algebra& Algebra::set(Index i, Index j, Index k, const Rational& c) {
  mult(i, j, k) = c;
  return *this;
}

CheckReport is_zinbiel(const Algebra& a) {
  const Index n = a.dim;
  std::vector<Vector> basis;
  for (Index i = 0; i < n; ++i) basis.push_back(unit(n, i));

  CheckReport report;
  report.results.push_back(check_condition(
      "Zinbiel", "x,y,z", {n, n, n}, [&](const std::vector<Index>& t) {
        const Vector& x = basis[t[0]];
        const Vector& y = basis[t[1]];
        const Vector& z = basis[t[2]];
        return std::pair{a(a(x, y), z), a(x, Vector(a(y, z) + a(z, y)))};
      }));
  return report;
}

bool subspace_check(const Algebra& a, const Matrix& basis, SubspaceMode mode) {
  if (basis.cols() != a.dim) throw ShapeError("subspace_check: basis vectors have the wrong length");
  if (rank(basis) != basis.rows()) throw PreconditionError("subspace_check: basis rows are linearly dependent");

  const Matrix span = basis.transpose();
  auto inside = [&](const Vector& v) { return coordinates_in<Rational>(span, v).has_value(); };

  for (Index i = 0; i < basis.rows(); ++i) {
    const Vector x = basis.row(i).transpose();
    if (mode == SubspaceMode::Subalgebra) {
      for (Index j = 0; j < basis.rows(); ++j)
        if (!inside(a(x, Vector(basis.row(j).transpose())))) return false;
    } else {
      for (Index k = 0; k < a.dim; ++k) {
        const Vector e = unit(a.dim, k);
        if (!inside(a(x, e)) || !inside(a(e, x))) return false;
      }
    }
  }
  return true;
}

CheckReport is_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi) {
  if (phi.rows() != b.dim || phi.cols() != a.dim)
    throw ShapeError("is_homomorphism: phi must have shape dim(b) × dim(a)");
  CheckReport report;
  report.results.push_back(check_condition(
      "Homomorphism", "x,y", {a.dim, a.dim}, [&](const std::vector<Index>& t) {
        const Vector x = unit(a.dim, t[0]);
        const Vector y = unit(a.dim, t[1]);
        return std::pair{Vector(phi * a(x, y)), b(Vector(phi * x), Vector(phi * y))};
      }));
  return report;
}

Algebra change_of_basis(const Algebra& a, const Matrix& p) {
  if (p.rows() != a.dim || p.cols() != a.dim) throw ShapeError("change_of_basis: p must be dim × dim");
  const Matrix p_inv = inverse(p);
  return Algebra(a.dim, transform(a.mult, p, p, p_inv));
}

Algebra restrict_to(const Algebra& a, const Matrix& columns) {
  if (columns.rows() != a.dim) throw ShapeError("restrict_to: vectors have the wrong length");
  if (rank(columns) != columns.cols()) throw PreconditionError("restrict_to: spanning vectors are dependent");
  const Index m = columns.cols();
  Algebra sub(m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      auto c = coordinates_in<Rational>(columns, a(columns.col(i), columns.col(j)));
      if (!c) throw PreconditionError("restrict_to: span is not closed under multiplication");
      sub.set(i, j, *c);
    }
  return sub;
}

std::string describe(const CheckReport& report) {
  std::ostringstream out;
  auto vec = [](const Vector& v) {
    std::string s = "(";
    for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
    return s + ")";
  };
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.label;
    if (r.witness) {
      out << "  at " << r.variables << " = (";
      for (std::size_t i = 0; i < r.witness->basis_tuple.size(); ++i)
        out << (i ? ", " : "") << r.witness->basis_tuple[i] + 1;
      out << ")  lhs = " << vec(r.witness->lhs) << "  rhs = " << vec(r.witness->rhs);
    }
    out << '\n';
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  out << (report.passed() ? "result: pass" : "result: fail") << '\n';
  return out.str();
}

}  // namespace zinbiel
