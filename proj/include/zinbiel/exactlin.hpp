#ifndef ZINBIEL_EXACTLIN_HPP
#define ZINBIEL_EXACTLIN_HPP

// Exact dense linear algebra over an arbitrary field scalar.
//
// The scalar used throughout the library is `Rational` (GMP-backed, always in
// lowest terms). The dense containers and elimination routines are templated
// on the scalar so they also run over any exact field type Eigen accepts.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "zinbiel/errors.hpp"

namespace zinbiel {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = Mat<Rational>;
using Vector = Vec<Rational>;
using RowVector = RowVec<Rational>;

/// Parses "p", "-p" or "p/q". The result is canonical; a zero denominator
/// or any other syntax throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

template <typename Scalar>
Vec<Scalar> unit(Index n, Index i) {
  Vec<Scalar> v = Vec<Scalar>::Zero(n);
  v(i) = Scalar(1);
  return v;
}

inline Vector unit(Index n, Index i) { return unit<Rational>(n, i); }

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Tensor3

/// Dense rank-3 array of structure constants. A bilinear map B: X×Y→Z with
/// dim X = d1, dim Y = d2, dim Z = d3 is stored so that
/// B(e_i, f_j) = Σ_k T(i, j, k) g_k.
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index d1, Index d2, Index d3)
      : dims_{d1, d2, d3}, data_(static_cast<std::size_t>(d1 * d2 * d3), Scalar(0)) {
    if (d1 < 0 || d2 < 0 || d3 < 0) throw ShapeError("Tensor3: negative dimension");
  }

  static Tensor3 Zero(Index d1, Index d2, Index d3) { return Tensor3(d1, d2, d3); }

  Index dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::array<Index, 3>& dims() const { return dims_; }
  bool has_dims(Index d1, Index d2, Index d3) const {
    return dims_[0] == d1 && dims_[1] == d2 && dims_[2] == d3;
  }

  Scalar& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
  const Scalar& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

  /// B(x, y) for coordinate vectors x ∈ X, y ∈ Y.
  template <typename DerivedX, typename DerivedY>
  Vec<Scalar> operator()(const Eigen::MatrixBase<DerivedX>& x,
                         const Eigen::MatrixBase<DerivedY>& y) const {
    if (x.size() != dims_[0] || y.size() != dims_[1])
      throw ShapeError("Tensor3: argument dimension mismatch");
    Vec<Scalar> out = Vec<Scalar>::Zero(dims_[2]);
    for (Index i = 0; i < dims_[0]; ++i) {
      if (x(i) == Scalar(0)) continue;
      for (Index j = 0; j < dims_[1]; ++j) {
        if (y(j) == Scalar(0)) continue;
        const Scalar xy = x(i) * y(j);
        for (Index k = 0; k < dims_[2]; ++k) {
          const Scalar& c = (*this)(i, j, k);
          if (c != Scalar(0)) out(k) += xy * c;
        }
      }
    }
    return out;
  }

  /// The output vector B(e_i, f_j).
  Vec<Scalar> fiber(Index i, Index j) const {
    Vec<Scalar> out(dims_[2]);
    for (Index k = 0; k < dims_[2]; ++k) out(k) = (*this)(i, j, k);
    return out;
  }

  template <typename Derived>
  void set_fiber(Index i, Index j, const Eigen::MatrixBase<Derived>& v) {
    if (v.size() != dims_[2]) throw ShapeError("Tensor3: fiber length mismatch");
    for (Index k = 0; k < dims_[2]; ++k) (*this)(i, j, k) = v(k);
  }

  bool is_zero() const {
    for (const auto& c : data_)
      if (c != Scalar(0)) return false;
    return true;
  }

  Tensor3& operator+=(const Tensor3& other) {
    if (dims_ != other.dims_) throw ShapeError("Tensor3: sum of mismatched tensors");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += other.data_[n];
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) {
    for (auto& c : a.data_) c *= s;
    return a;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k);
  }

  std::array<Index, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

using Tensor = Tensor3<Rational>;

/// Transports each argument and the output of a bilinear map:
/// result(a, b) = out · B(in1 · a, in2 · b).
template <typename Scalar>
Tensor3<Scalar> transform(const Tensor3<Scalar>& t, const Mat<Scalar>& in1, const Mat<Scalar>& in2,
                          const Mat<Scalar>& out) {
  if (in1.rows() != t.dim(0) || in2.rows() != t.dim(1) || out.cols() != t.dim(2))
    throw ShapeError("transform: matrix shapes do not match the tensor");
  Tensor3<Scalar> result(in1.cols(), in2.cols(), out.rows());
  for (Index a = 0; a < in1.cols(); ++a)
    for (Index b = 0; b < in2.cols(); ++b)
      result.set_fiber(a, b, out * t(in1.col(a), in2.col(b)));
  return result;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

template <typename Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;        // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <typename Scalar>
RowEchelon<Scalar> rref(Mat<Scalar> m) {
  RowEchelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return static_cast<Index>(rref<Scalar>(Mat<Scalar>(m)).pivots.size());
}

/// Kernel basis straight from the echelon form: one vector per free column,
/// with a 1 in that column.
template <typename Scalar>
std::vector<Vec<Scalar>> kernel_basis(const Mat<Scalar>& m) {
  const auto ech = rref<Scalar>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vec<Scalar>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v(ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  const Index n = m.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << m, Mat<Scalar>::Identity(n, n);
  auto ech = rref<Scalar>(std::move(aug));
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw SingularMatrixError("inverse: matrix is singular");
  return ech.reduced.rightCols(n);
}

template <typename Scalar>
bool is_invertible(const Mat<Scalar>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Coordinates c with columns · c = v, or nothing when v is outside the span.
/// Columns must be linearly independent.
template <typename Scalar>
std::optional<Vec<Scalar>> coordinates_in(const Mat<Scalar>& columns, const Vec<Scalar>& v) {
  if (columns.rows() != v.size()) throw ShapeError("coordinates_in: length mismatch");
  Mat<Scalar> aug(columns.rows(), columns.cols() + 1);
  aug << columns, v;
  const auto ech = rref<Scalar>(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == columns.cols()) return std::nullopt;
  Vec<Scalar> c = Vec<Scalar>::Zero(columns.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    c(ech.pivots[r]) = ech.reduced(static_cast<Index>(r), columns.cols());
  return c;
}

/// Exact kernel of m. Each basis vector is scaled to a primitive integer
/// vector whose free-variable entry is positive; the order follows the free
/// columns left to right.
std::vector<Vector> nullspace(const Matrix& m);

/// Scales v by a positive rational so that it becomes a primitive integer vector.
Vector clear_denominators(const Vector& v);

// ---------------------------------------------------------------------------
// Multivariate polynomials

/// Sparse polynomial over a fixed ordered list of variables. Exponent vectors
/// always have one slot per variable and zero coefficients are never stored.
template <typename Scalar>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const Scalar& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), c);
    return p;
  }

  static MultiPoly variable(std::vector<std::string> variables, std::size_t i) {
    MultiPoly p(std::move(variables));
    Exponents e(p.variables_.size(), 0);
    e.at(i) = 1;
    p.add_term(std::move(e), Scalar(1));
    return p;
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(Exponents e, const Scalar& c) {
    if (e.size() != variables_.size()) throw ShapeError("MultiPoly: exponent length mismatch");
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != variables_.size()) throw ShapeError("MultiPoly: wrong number of values");
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        for (int k = 0; k < e[v]; ++k) term *= point[v];
      total += term;
    }
    return total;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.variables_ != variables_) throw ShapeError("MultiPoly: variable lists differ");
  }

  std::vector<std::string> variables_;
  std::map<Exponents, Scalar> terms_;
};

using Poly = MultiPoly<Rational>;

/// Graded order used for printing and normalization: higher total degree
/// first, then larger exponent vectors first.
bool graded_greater(const std::vector<int>& a, const std::vector<int>& b);

/// Scales p to a primitive integer polynomial whose leading term (in the
/// graded order) has a positive coefficient. Zero stays zero.
Poly normalized(const Poly& p);

/// Human-readable form such as "t1*t2" or "mu1^2 - 2*mu3".
std::string to_string(const Poly& p);

/// Names "prefix1", ..., "prefixN".
std::vector<std::string> indexed_names(std::string_view prefix, std::size_t n);

enum class QuadraticConstraint { SquareIsZero };

using MatrixBilinearForm = std::function<Matrix(const Matrix&, const Matrix&)>;

/// Expands form(F(t), F(t)) = 0 for the family F(t) = Σ t_i B_i into one
/// polynomial per matrix entry, in variables t1..tp. The result is normalized,
/// free of zero polynomials and duplicates, and sorted.
std::vector<Poly> poly_expand_quadratic(std::span<const Matrix> family, const MatrixBilinearForm& form);
std::vector<Poly> poly_expand_quadratic(std::span<const Matrix> family, QuadraticConstraint constraint);

/// Normalizes, drops zeros and duplicates, and sorts a polynomial list.
std::vector<Poly> canonical_polynomial_set(std::vector<Poly> polys);

}  // namespace zinbiel

#endif  // ZINBIEL_EXACTLIN_HPP
