#include "zinbiel/sampling.hpp"

#include "zinbiel/catalog.hpp"

namespace zinbiel {

namespace {

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational sparse_entry(Rng& rng, double density) {
  if (!chance(rng, density)) return 0;
  return chance(rng, 0.5) ? 1 : -1;
}

// Either all zero or sparse random, so both outcomes of the checks show up.
Tensor maybe_tensor(Rng& rng, Index d1, Index d2, Index d3) {
  if (chance(rng, 0.5)) return Tensor(d1, d2, d3);
  return random_sparse_tensor(rng, d1, d2, d3, chance(rng, 0.5) ? 0.1 : 0.3);
}

}  // namespace

Tensor random_sparse_tensor(Rng& rng, Index d1, Index d2, Index d3, double density) {
  Tensor t(d1, d2, d3);
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d2; ++j)
      for (Index k = 0; k < d3; ++k) t(i, j, k) = sparse_entry(rng, density);
  return t;
}

Matrix random_sparse_matrix(Rng& rng, Index rows, Index cols, double density) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = sparse_entry(rng, density);
  return m;
}

Rational random_nonzero_rational(Rng& rng) {
  int p = 0;
  while (p == 0) p = pick(rng, -9, 9);
  return Rational(Integer(p), Integer(pick(rng, 1, 5)));
}

Matrix random_invertible(Rng& rng, Index n) {
  while (true) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = pick(rng, -2, 2);
    if (is_invertible(m)) return m;
  }
}

Algebra random_zinbiel_of_dim(Rng& rng, Index n) {
  Algebra a(n);
  if (n == 2 && chance(rng, 0.5)) {
    // e1·e1 = e2 is the smallest non-null Zinbiel algebra.
    a.set(0, 0, 1, 1);
  } else if (n == 3) {
    switch (pick(rng, 0, 6)) {
      case 0: a = algebra_A1(); break;
      case 1: a = algebra_A2(); break;
      case 2: a = algebra_A3(); break;
      case 3: a = algebra_A4(); break;
      case 4: a = algebra_A5(random_nonzero_rational(rng)); break;
      case 5: a = algebra_A6(); break;
      default: break;
    }
    a.names.clear();
  }
  if (n > 0 && chance(rng, 0.5)) a = change_of_basis(a, random_invertible(rng, n));
  return a;
}

Algebra random_zinbiel(Rng& rng, Index max_dim) { return random_zinbiel_of_dim(rng, pick(rng, 1, static_cast<int>(max_dim))); }

ExtendingDatum random_datum(Rng& rng, Index dimZ, Index dimV) {
  Algebra base = chance(rng, 0.8) ? random_zinbiel_of_dim(rng, dimZ)
                                  : Algebra(dimZ, random_sparse_tensor(rng, dimZ, dimZ, dimZ, 0.2));
  ExtendingDatum d = ExtendingDatum::trivial(base, dimV);
  const Index n = dimZ;
  const Index m = dimV;
  d.actL = maybe_tensor(rng, m, n, m);
  d.actR = maybe_tensor(rng, n, m, m);
  d.projL = maybe_tensor(rng, n, m, n);
  d.projR = maybe_tensor(rng, m, n, n);
  d.omega = maybe_tensor(rng, m, m, n);
  d.star = maybe_tensor(rng, m, m, m);
  return d;
}

CrossedSystem random_crossed_system(Rng& rng) {
  const Algebra z = random_zinbiel(rng, 3);
  const Algebra w = random_zinbiel(rng, 2);
  CrossedSystem cs = CrossedSystem::trivial(z, w);
  cs.projR = maybe_tensor(rng, w.dim, z.dim, z.dim);
  cs.projL = maybe_tensor(rng, z.dim, w.dim, z.dim);
  cs.omega = maybe_tensor(rng, w.dim, w.dim, z.dim);
  return cs;
}

MatchedPair random_matched_pair(Rng& rng) {
  const Algebra z = random_zinbiel(rng, 3);
  const Algebra w = random_zinbiel(rng, 2);
  MatchedPair mp = MatchedPair::trivial(z, w);
  mp.actL = maybe_tensor(rng, w.dim, z.dim, w.dim);
  mp.projR = maybe_tensor(rng, w.dim, z.dim, z.dim);
  mp.projL = maybe_tensor(rng, z.dim, w.dim, z.dim);
  mp.actR = maybe_tensor(rng, z.dim, w.dim, w.dim);
  return mp;
}

FlagDatum random_flag_datum(Rng& rng) {
  FlagDatum fd = FlagDatum::zero(random_zinbiel(rng, 3));
  const Index n = fd.base.dim;
  if (chance(rng, 0.3)) fd.x0 = random_sparse_matrix(rng, n, 1, 0.3).col(0);
  if (chance(rng, 0.3)) fd.k0 = sparse_entry(rng, 0.5);
  if (chance(rng, 0.3)) fd.mu = random_sparse_matrix(rng, 1, n, 0.3).row(0);
  if (chance(rng, 0.5)) fd.D = random_sparse_matrix(rng, n, n, 0.2);
  if (chance(rng, 0.5)) fd.T = random_sparse_matrix(rng, n, n, 0.2);
  return fd;
}

}  // namespace zinbiel
