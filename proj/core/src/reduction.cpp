#include "latmass/reduction.hpp"

namespace latmass {

namespace {

// Gram-Schmidt data over Q computed from an integer Gram matrix.
struct Gso {
  std::vector<Rat> B;                // squared lengths of b_i*
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
};

Gso gso_from_gram(const IMat& g) {
  std::size_t n = g.rows();
  Gso s;
  s.B.assign(n, Rat(0));
  s.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  // <b_i, b_j*> computed recursively from the Gram matrix alone.
  std::vector<std::vector<Rat>> inner(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rat v = Rat(g(i, j));
      for (std::size_t k = 0; k < j; ++k) v -= s.mu[j][k] * inner[i][k];
      inner[i][j] = v;
      if (j < i) s.mu[i][j] = s.B[j] == 0 ? Rat(0) : v / s.B[j];
    }
    s.B[i] = inner[i][i];
  }
  return s;
}

Int nearest_int(const Rat& m) {
  return floor_div(2 * numerator(m) + denominator(m), 2 * denominator(m));
}

}  // namespace

ReducedLattice lll_reduce(const IntLattice& l) {
  std::size_t n = l.rank();
  IMat g = l.gram;
  IMat u = IMat::identity(n);
  if (n <= 1) return {IntLattice(g, l.label), u};

  const Rat delta(99, 100);
  Gso s = gso_from_gram(g);

  // b_i -= round(mu_ij) b_j, applied to the transform and the Gram matrix.
  auto apply_reduce = [&](std::size_t i, std::size_t j) {
    Int q = nearest_int(s.mu[i][j]);
    if (q == 0) return false;
    Int gii = g(i, i) - 2 * q * g(i, j) + q * q * g(j, j);
    for (std::size_t c = 0; c < n; ++c) u(i, c) -= q * u(j, c);
    for (std::size_t c = 0; c < n; ++c) {
      if (c == i) continue;
      g(i, c) -= q * g(j, c);
      g(c, i) = g(i, c);
    }
    g(i, i) = gii;
    return true;
  };

  // Recomputing the GSO after each change keeps the updates simple; at the
  // ranks this library targets the cost is acceptable.
  std::size_t k = 1;
  while (k < n) {
    s = gso_from_gram(g);
    bool changed = false;
    for (std::size_t j = k; j-- > 0;) {
      if (apply_reduce(k, j)) {
        s = gso_from_gram(g);
        changed = true;
      }
    }
    (void)changed;
    if (s.B[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.B[k - 1]) {
      ++k;
    } else {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(u(k, c), u(k - 1, c));
        std::swap(g(k, c), g(k - 1, c));
      }
      for (std::size_t r = 0; r < n; ++r) std::swap(g(r, k), g(r, k - 1));
      k = k > 1 ? k - 1 : 1;
    }
  }
  return {IntLattice(g, l.label), u};
}

}  // namespace latmass
