#include "latmass/lattice.hpp"

namespace latmass {

bool IntLattice::is_positive_definite() const {
  std::size_t n = rank();
  for (std::size_t k = 1; k <= n; ++k) {
    IMat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (det(minor) <= 0) return false;
  }
  return true;
}

QMat RationalSpan::pairing() const {
  std::size_t k = generators.size(), m = ambient_dim();
  QMat p(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rat s = 0;
      for (std::size_t a = 0; a < m; ++a) {
        if (generators[i][a] == 0) continue;
        Rat t = 0;
        for (std::size_t b = 0; b < m; ++b) t += ambient_gram(a, b) * generators[j][b];
        s += generators[i][a] * t;
      }
      p(i, j) = s;
      p(j, i) = s;
    }
  return p;
}

IntLattice hyperbolic_plane() {
  IMat g(2, 2, {0, -1, -1, 0});
  return IntLattice(std::move(g), "II1,1");
}

IntLattice rescale(const IntLattice& l, const Int& k) {
  if (k <= 0) throw domain_error("rescale: k must be positive");
  IMat g = l.gram;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  std::string label = l.label;
  if (k != 1 && !label.empty()) label = "scale" + k.str() + "(" + label + ")";
  return IntLattice(std::move(g), std::move(label));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  IMat g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
  std::string label;
  if (!a.label.empty() && !b.label.empty())
    label = a.label + "+" + b.label;
  return IntLattice(std::move(g), std::move(label));
}

IntLattice d_plus(unsigned n) {
  if (n == 0 || n % 8 != 0)
    throw domain_error("d_plus: n must be a positive multiple of 8");
  // Ambient Z^n with the standard form; generators: D_n basis plus the glue
  // vector (1/2,...,1/2).
  RationalSpan span;
  span.ambient_gram = QMat::identity(n);
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::vector<Rat> v(n);
    v[i] = 1;
    v[i + 1] = -1;
    span.generators.push_back(std::move(v));
  }
  {
    std::vector<Rat> v(n);
    v[n - 2] = 1;
    v[n - 1] = 1;
    span.generators.push_back(std::move(v));
  }
  {
    std::vector<Rat> v(n, Rat(1, 2));
    span.generators.push_back(std::move(v));
  }
  IntLattice l = lattice_from_generators(span);
  l.label = "D" + std::to_string(n) + "+";
  return l;
}

SpanReduction span_basis(const RationalSpan& span) {
  std::size_t k = span.generators.size(), m = span.ambient_dim();
  for (const auto& g : span.generators)
    if (g.size() != m) throw domain_error("span_basis: generator length mismatch");

  // Clear denominators: common denominator d over all generator entries.
  Int d = 1;
  for (const auto& g : span.generators)
    for (const auto& x : g) d = boost::multiprecision::lcm(d, denominator(x));
  IMat num(k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rat scaled = span.generators[i][j] * Rat(d);
      num(i, j) = numerator(scaled);
    }
  IMat basis_num = row_basis_hnf(num);
  std::size_t r = basis_num.rows();

  SpanReduction out;
  out.basis = QMat(r, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) out.basis(i, j) = Rat(basis_num(i, j), d);

  QMat gram_q = out.basis * span.ambient_gram * out.basis.transposed();
  if (det(gram_q) == 0) {
    // Radical dimension = r - rank of the pairing.
    std::size_t rk = rank(gram_q);
    throw domain_error("span_basis: degenerate span (radical dimension " +
                       std::to_string(r - rk) + ")");
  }
  IMat gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (denominator(gram_q(i, j)) != 1) out.integral = false;
      gram(i, j) = numerator(gram_q(i, j));  // only meaningful when integral
    }
  if (out.integral) out.lattice = IntLattice(std::move(gram));
  return out;
}

IntLattice lattice_from_generators(const RationalSpan& span) {
  SpanReduction red = span_basis(span);
  if (!red.integral)
    throw domain_error("lattice_from_generators: non-integral pairing in generated lattice");
  return red.lattice;
}

DiscriminantGroup dual_and_discriminant(const IntLattice& l) {
  Int d = l.determinant();
  if (d == 0) throw domain_error("dual_and_discriminant: degenerate lattice");
  DiscriminantGroup g;
  for (const auto& e : smith_divisors(l.gram)) {
    if (e != 1) g.elementary_divisors.push_back(e);
    g.order *= e;
  }
  if (g.order < 0) g.order = -g.order;
  return g;
}

}  // namespace latmass
