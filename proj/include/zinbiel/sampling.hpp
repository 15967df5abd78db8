#ifndef ZINBIEL_SAMPLING_HPP
#define ZINBIEL_SAMPLING_HPP

#include <random>
#include <vector>

#include "zinbiel/flag.hpp"
#include "zinbiel/products.hpp"

namespace zinbiel {

using Rng = std::mt19937_64;

/// Entries drawn from {−1, 0, 1}; each entry is nonzero with probability `density`.
Tensor random_sparse_tensor(Rng& rng, Index d1, Index d2, Index d3, double density);
Matrix random_sparse_matrix(Rng& rng, Index rows, Index cols, double density);

/// Nonzero rational p/q with |p| ≤ 9 and 1 ≤ q ≤ 5.
Rational random_nonzero_rational(Rng& rng);

/// Invertible matrix with entries in {−2, ..., 2}.
Matrix random_invertible(Rng& rng, Index n);

/// Zinbiel algebras of dimension 1 to 3: null algebras, A1–A6 and random
/// changes of basis of them.
Algebra random_zinbiel(Rng& rng, Index max_dim = 3);

/// Small Zinbiel algebra of exactly dimension n (n ≤ 3).
Algebra random_zinbiel_of_dim(Rng& rng, Index n);

/// Random datum with sparse {−1, 0, 1} maps. The base is Zinbiel most of the
/// time and an arbitrary sparse algebra otherwise; some maps are left zero
/// so that a fair share of samples pass.
ExtendingDatum random_datum(Rng& rng, Index dimZ, Index dimV);

CrossedSystem random_crossed_system(Rng& rng);
MatchedPair random_matched_pair(Rng& rng);

/// Random flag datum on a small Zinbiel base; most fail the flag conditions.
FlagDatum random_flag_datum(Rng& rng);

}  // namespace zinbiel

#endif  // ZINBIEL_SAMPLING_HPP
