#ifndef ZINBIEL_FLAG_HPP
#define ZINBIEL_FLAG_HPP

#include <vector>

#include "zinbiel/extending.hpp"

namespace zinbiel {

/// Data of a one-dimensional extension Z ⊕ k·u:
///   u∘u = x0 + k0·u,  x∘u = T(x),  u∘x = D(x) + μ(x)·u.
/// D and T act on column vectors.
struct FlagDatum {
  Algebra base;
  Vector x0;
  Rational k0;
  RowVector mu;
  Matrix D;
  Matrix T;

  static FlagDatum zero(const Algebra& base);
  void validate() const;

  friend bool operator==(const FlagDatum& a, const FlagDatum& b) {
    return a.base == b.base && a.x0 == b.x0 && a.k0 == b.k0 && a.mu == b.mu && a.D == b.D && a.T == b.T;
  }
};

/// The solution set of a reduced flag problem: points Σ t_i·B_i of the
/// linear span on which every residual polynomial vanishes.
struct SolutionFamily {
  std::vector<Matrix> linear_basis;
  std::vector<Poly> residuals;

  Matrix at(std::span<const Rational> t) const;
};

/// s(u) = q·u and r(u) = r_vec.
struct FlagEquivalenceWitness {
  Rational q;
  Vector r_vec;
};

enum class FlagMode { D, T };

/// Zinbiel(Z) followed by F1, F2, F3, F4(i), F4(ii), F5, F6, F7, F8(i), F8(ii).
/// These are the datum conditions Z1–Z12 written out for dim V = 1:
///   F1     μ(x·y) = μ(y)μ(x) − μ(y·x)
///   F2     μ(D(x) + T(x)) = 0
///   F3     D(x·y) = D(x)·y + μ(x)D(y) − D(y·x)
///   F4(i)  T(x·y) = T(x)·y
///   F4(ii) T(x)·y = x·(D(y) + T(y)) + μ(y)T(x)
///   F5     T²(x) = 2x·x0 + 2k0·T(x)
///   F6     D²(x) = T(D(x)) − D(T(x))
///   F7     T(D(x)) = x0·x + k0·D(x) − μ(x)x0
///   F8(i)  T(x0) = 2D(x0) + k0·x0
///   F8(ii) 0 = 2μ(x0) + k0²
CheckReport verify_flag(const FlagDatum& fd);

/// u◁x = μ(x)u, x▷u = 0, u⊳x = D(x), x⊲u = T(x), ω(u,u) = x0, u∗u = k0·u.
ExtendingDatum flag_to_datum(const FlagDatum& fd);

struct FlagExtension {
  ExtendingDatum datum;
  Algebra algebra;
};

/// Requires verify_flag(fd) to pass.
FlagExtension build_flag_extension(const FlagDatum& fd);

/// The linear conditions of the reduced problem (x0 = 0, k0 = 0 and the other
/// map zero) solved exactly, plus the expansion of M² = 0 over the solution basis.
///   D-case: μ∘D = 0, F3, x·D(y) = 0
///   T-case: μ∘T = 0, T(x·y) = T(x)·y, T(x)·y = x·T(y) + μ(y)T(x)
/// Unknowns are ordered a11, a12, ..., ann where a_ij is the coefficient of
/// e_j in M(e_i). Throws PreconditionError when μ violates F1.
SolutionFamily solve_reduced(const Algebra& z, const RowVector& mu, FlagMode mode);

/// The F1 report for μ alone.
CheckReport mu_report(const Algebra& z, const RowVector& mu);

/// μ(e_i·e_j) + μ(e_j·e_i) − μ_i μ_j over all pairs, in variables mu1..mun.
std::vector<Poly> mu_constraints(const Algebra& z);

/// The flag relations, labelled mu, D, T, k0, x0:
///   μ = μ′
///   D(x) = qD′(x) + r·x − μ(x)r
///   T(x) = qT′(x) + x·r
///   k0 = qk0′ + μ′(r)
///   x0 = q²x0′ + r·r − k0·r + qT′(r) + qD′(r)
CheckReport flag_equivalence_report(const FlagDatum& fd, const FlagDatum& fd2, const FlagEquivalenceWitness& w);

/// The flag relations, cross-checked against datums_equivalent on the induced
/// datums with (r, s) = (r_vec, q). A disagreement throws ConsistencyError.
bool flag_equivalent(const FlagDatum& fd, const FlagDatum& fd2, const FlagEquivalenceWitness& w);

/// The unique fd with flag_equivalent(fd, fd2, w).
FlagDatum flag_transport(const FlagDatum& fd2, const FlagEquivalenceWitness& w);

}  // namespace zinbiel

#endif  // ZINBIEL_FLAG_HPP
