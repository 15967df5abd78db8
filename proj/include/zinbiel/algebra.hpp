#ifndef ZINBIEL_ALGEBRA_HPP
#define ZINBIEL_ALGEBRA_HPP

#include <string>
#include <vector>

#include "zinbiel/exactlin.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

/// A finite-dimensional algebra given by structure constants:
/// e_i · e_j = Σ_k mult(i, j, k) e_k. Nothing here assumes the Zinbiel
/// identity; `is_zinbiel` decides it.
struct Algebra {
  Index dim = 0;
  Tensor mult;
  std::vector<std::string> names;  // optional basis labels, empty or size dim

  Algebra() = default;
  explicit Algebra(Index n) : dim(n), mult(n, n, n) {}
  Algebra(Index n, Tensor constants, std::vector<std::string> labels = {});

  /// Algebra with zero multiplication.
  static Algebra null(Index n) { return Algebra(n); }

  template <typename DerivedX, typename DerivedY>
  Vector operator()(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) const {
    return mult(x, y);
  }

  /// Sets e_i · e_j = Σ coefficients[k] e_k (0-based indices).
  Algebra& set(Index i, Index j, const Vector& value);
  Algebra& set(Index i, Index j, Index k, const Rational& c);

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim == b.dim && a.mult == b.mult; }
};

enum class SubspaceMode { Subalgebra, Ideal };

/// Checks (x·y)·z = x·(y·z + z·y) on all basis triples. Multilinearity makes
/// that sufficient. The first failing triple in lexicographic order is reported.
CheckReport is_zinbiel(const Algebra& a);

/// Rows of `basis` span the subspace. Throws PreconditionError when they are dependent.
bool subspace_check(const Algebra& a, const Matrix& basis, SubspaceMode mode);

/// phi acts on column vectors and has shape dim(b) × dim(a).
CheckReport is_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi);

/// Transports a along p: the columns of p are the new basis vectors written
/// in the old coordinates, so p is an isomorphism change_of_basis(a, p) → a.
Algebra change_of_basis(const Algebra& a, const Matrix& p);

/// Algebra on the coordinate subspace spanned by `columns` (columns are
/// vectors of a). Throws PreconditionError when the span is not closed.
Algebra restrict_to(const Algebra& a, const Matrix& columns);

}  // namespace zinbiel

#endif  // ZINBIEL_ALGEBRA_HPP
