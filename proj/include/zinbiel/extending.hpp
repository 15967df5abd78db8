#ifndef ZINBIEL_EXTENDING_HPP
#define ZINBIEL_EXTENDING_HPP

#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Six bilinear maps describing an algebra structure on Z ⊕ V that contains
/// Z as a subalgebra:
///   actL  ◁ : V×Z→V      actR  ▷ : Z×V→V
///   projL ⊲ : Z×V→Z      projR ⊳ : V×Z→Z
///   omega ω : V×V→Z      star  ∗ : V×V→V
struct ExtendingDatum {
  Algebra base;
  Index dimV = 0;
  Tensor actL, actR, projL, projR, omega, star;

  static ExtendingDatum trivial(const Algebra& base, Index dimV);

  Index dimZ() const { return base.dim; }

  /// Throws ShapeError when a tensor does not fit (dim Z, dim V).
  void validate() const;

  friend bool operator==(const ExtendingDatum&, const ExtendingDatum&) = default;
};

/// (r, s) with r: V→Z (dim Z × dim V) and s: V→V (dim V × dim V), acting on columns.
struct MorphismPair {
  Matrix r;
  Matrix s;

  static MorphismPair identity(Index dimZ, Index dimV) {
    return {Matrix::Zero(dimZ, dimV), Matrix::Identity(dimV, dimV)};
  }
};

/// E together with an embedded copy of Z and a chosen complement.
/// Columns of z_embed are the images of the Z basis in E; rows of
/// complement span V.
struct InclusionPresentation {
  Algebra total;
  Matrix z_embed;
  Matrix complement;
};

/// Presentation by coordinates: Z is spanned by the listed basis vectors of E
/// (0-based) and V by the remaining ones.
InclusionPresentation coordinate_presentation(const Algebra& e, const std::vector<Index>& z_indices);

/// Zinbiel(Z) followed by Z1(i), Z1(ii), Z1(iii), Z2, ..., Z12.
CheckReport verify_datum(const ExtendingDatum& d);

/// The unified product on Z ⊕ V, Z coordinates first:
/// (x,u)∘(y,v) = (x·y + x⊲v + u⊳y + ω(u,v), x▷v + u◁y + u∗v).
/// With force = false the datum must pass verify_datum. With force = true the
/// raw product is returned with no Zinbiel guarantee.
Algebra build_unified(const ExtendingDatum& d, bool force = false);

/// Product of two elements of Z ⊕ V given in unified coordinates.
Vector unified_product(const ExtendingDatum& d, const Vector& a, const Vector& b);

/// Splits the products of E along Z and V. Z is given its induced algebra
/// structure in the coordinates of z_embed.
ExtendingDatum extract_datum(const InclusionPresentation& p);

/// The isomorphism build_unified(extract_datum(p)) → p.total, (x, u) ↦ x + u,
/// written in E's coordinates.
Matrix presentation_map(const InclusionPresentation& p);

/// M1–M6. Cross-checked against the homomorphism test for
/// ψ(x, u) = (x + r(u), s(u)); a disagreement throws ConsistencyError.
CheckReport is_morphism_pair(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair);

/// ψ(x, u) = (x + r(u), s(u)) as a matrix on unified coordinates.
Matrix morphism_matrix(const MorphismPair& pair);

/// The six relations of the equivalence of datums, one result each, labelled
/// by the map they constrain: actL, actR, projR, projL, star, omega.
/// Throws SingularMatrixError when s is not invertible.
CheckReport equivalence_report(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair);
bool datums_equivalent(const ExtendingDatum& d, const ExtendingDatum& d2, const MorphismPair& pair);

/// The four relations of cohomologous datums (projR, projL, star, omega) for the
/// given r. Requires ◁ = ◁′ and ▷ = ▷′ and throws PreconditionError otherwise.
CheckReport cohomology_report(const ExtendingDatum& d, const ExtendingDatum& d2, const Matrix& r);
bool datums_cohomologous(const ExtendingDatum& d, const ExtendingDatum& d2, const Matrix& r);

/// Inverse pair: ψ(r,s)⁻¹ = ψ(−r s⁻¹, s⁻¹).
MorphismPair inverse_pair(const MorphismPair& pair);

/// The datum d2 transported along ψ = ψ(r,s): the unique datum d with
/// ψ: build_unified(d) → build_unified(d2) an isomorphism. Used as an
/// independent route to equivalent datums.
ExtendingDatum pull_back(const ExtendingDatum& d2, const MorphismPair& pair);

}  // namespace zinbiel

#endif  // ZINBIEL_EXTENDING_HPP
