#ifndef ZINBIEL_PRODUCTS_HPP
#define ZINBIEL_PRODUCTS_HPP

#include <utility>
#include <vector>

#include "zinbiel/extending.hpp"

namespace zinbiel {

/// Actions ▷: Z×V→V and ◁: V×Z→V.
struct Bimodule {
  Algebra base;
  Index dimV = 0;
  Tensor actR;
  Tensor actL;

  /// V = Z with both actions given by the product of Z.
  static Bimodule regular(const Algebra& z);
  void validate() const;
};

/// ⊳: W×Z→Z, ⊲: Z×W→Z and a cocycle ω: W×W→Z.
struct CrossedSystem {
  Algebra base;
  Algebra top;
  Tensor projR;
  Tensor projL;
  Tensor omega;

  static CrossedSystem trivial(const Algebra& z, const Algebra& w);
  void validate() const;
};

/// ◁: W×Z→W, ⊳: W×Z→Z, ⊲: Z×W→Z, ▷: Z×W→W. The signatures are the ones
/// the bicrossed product formula needs.
struct MatchedPair {
  Algebra base;
  Algebra top;
  Tensor actL;
  Tensor projR;
  Tensor projL;
  Tensor actR;

  static MatchedPair trivial(const Algebra& z, const Algebra& w);
  void validate() const;
};

struct DeformationWitness {
  Matrix sigma;  // W→W, acting on columns
};

template <typename Product>
struct Checked {
  CheckReport report;
  Product value;
};

/// Zinbiel(Z) followed by the three bimodule axioms BM1–BM3:
///   (x·y)▷v = x▷(y▷v + v◁y)
///   (v◁x)◁y = v◁(x·y + y·x)
///   (x▷v)◁y = x▷(v◁y + y▷v)
CheckReport is_bimodule(const Bimodule& b);

/// (x,u)·(y,v) = (x·y, x▷v + u◁y). Requires is_bimodule(b) to pass.
Algebra semidirect(const Bimodule& b);

/// The datum whose only nonzero maps are the two actions.
ExtendingDatum as_datum(const Bimodule& b);
/// ◁ = ▷ = 0 and ∗ = multiplication of W.
ExtendingDatum as_datum(const CrossedSystem& cs);
/// ω = 0 and ∗ = multiplication of W.
ExtendingDatum as_datum(const MatchedPair& mp);

/// Report Zinbiel(Z), Zinbiel(W), CS1–CS7 together with the crossed product
/// (x,u)∘(y,v) = (x·y + x⊲v + u⊳y + ω(u,v), u·v), assembled directly.
Checked<Algebra> crossed(const CrossedSystem& cs);

/// Report (the datum conditions at ω = 0 and ∗ = multiplication of W) together
/// with the bicrossed product (x·y + x⊲v + u⊳y, x▷v + u◁y + u·v), assembled directly.
Checked<Algebra> bicrossed(const MatchedPair& mp);

/// Canonical matched pair of a factorization E = Z ⊕ W. Rows of z_basis and
/// w_basis span the two subalgebras.
MatchedPair factorization_extract(const Algebra& e, const Matrix& z_basis, const Matrix& w_basis);

/// r: W→Z (dim Z × dim W) satisfies
/// r(u·v) − r(u)·r(v) = u⊳r(v) + r(u)⊲v − r(u◁r(v) + r(u)▷v).
CheckReport deformation_report(const MatchedPair& mp, const Matrix& r);
bool is_deformation_map(const MatchedPair& mp, const Matrix& r);

/// Rows (r(u), u) for the basis of W: the graph of r inside Z ⋈ W.
Matrix deformation_graph(const MatchedPair& mp, const Matrix& r);

/// W with u·_r v = u·v + u◁r(v) + r(u)▷v. Requires r to be a deformation map;
/// also confirms that the graph of r is a subalgebra and a complement of Z.
Algebra r_deform(const MatchedPair& mp, const Matrix& r);

/// σ(u·v) − σ(u)·σ(v) = σ(u)◁R(σ(v)) + R(σ(u))▷σ(v) − σ(u◁r(v)) − σ(r(u)▷v).
/// Cross-checked against σ being a homomorphism W_r → W_R.
CheckReport deformation_equivalence_report(const MatchedPair& mp, const Matrix& r, const Matrix& R,
                                           const DeformationWitness& w);
bool deformations_equivalent(const MatchedPair& mp, const Matrix& r, const Matrix& R, const DeformationWitness& w);

/// Every r: W→Z with entries from `coeffs` that is a deformation map, in
/// canonical order (lexicographic on the images r(f_1), r(f_2), ...).
/// Throws PreconditionError when the grid has more than `budget` points.
std::vector<Matrix> search_deformation_maps(const MatchedPair& mp, std::vector<Rational> coeffs,
                                            std::size_t budget = 1u << 20);

/// All invertible σ with entries from `coeffs` that witness r ~ R, in the same
/// canonical order.
std::vector<Matrix> search_deformation_equivalences(const MatchedPair& mp, const Matrix& r, const Matrix& R,
                                                    std::vector<Rational> coeffs, std::size_t budget = 1u << 20);

}  // namespace zinbiel

#endif  // ZINBIEL_PRODUCTS_HPP
