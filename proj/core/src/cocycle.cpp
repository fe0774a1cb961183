#include "latmass/cocycle.hpp"

#include <set>

namespace latmass {

namespace {

// Integer HNF solve: c * R = target for HNF-basis rows R (echelon, positive
// pivots); throws if the target is outside the row lattice.
std::vector<Int> solve_in_row_basis(const IMat& r, std::vector<Int> target) {
  std::size_t q = r.rows(), m = r.cols();
  std::vector<Int> c(q, Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < q; ++i) {
    while (col < m && r(i, col) == 0) ++col;
    if (col == m) throw domain_error("solve_in_row_basis: zero basis row");
    if (target[col] % r(i, col) != 0)
      throw domain_error("solve_in_row_basis: target outside row lattice");
    c[i] = target[col] / r(i, col);
    if (c[i] != 0)
      for (std::size_t jj = 0; jj < m; ++jj) target[jj] -= c[i] * r(i, jj);
  }
  for (std::size_t jj = 0; jj < m; ++jj)
    if (target[jj] != 0) throw domain_error("solve_in_row_basis: inconsistent target");
  return c;
}

}  // namespace

RadicalQuotient radical_quotient(const RationalSpan& span) {
  std::size_t k = span.generators.size();
  QMat pairing = span.pairing();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      if (denominator(pairing(i, j)) != 1)
        throw domain_error("radical_quotient: non-integral pairing of generators " +
                           std::to_string(i) + "," + std::to_string(j));
      if (i == j && numerator(pairing(i, i)) % 2 != 0)
        throw domain_error("radical_quotient: odd self-pairing of generator " +
                           std::to_string(i));
    }
  IMat p(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p(i, j) = numerator(pairing(i, j));

  // psi(x) = (x, g_1..g_k) identifies L/rad with the row lattice of p.
  IMat basis = row_basis_hnf(p);
  std::size_t q = basis.rows();

  RadicalQuotient out;
  out.projection = QMat(k, q);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = solve_in_row_basis(basis, p.row(i));
    for (std::size_t j = 0; j < q; ++j) out.projection(i, j) = Rat(c[j]);
  }

  // Gram of the quotient: pick rational preimages x_a of the basis rows
  // (x_a p = basis_a) and pair them; well-defined modulo the radical.
  if (q > 0) {
    QMat pq = p.cast<Rat>();
    // Solve X p = basis over Q, i.e. p^T X^T = basis^T; p symmetric.
    // Build a full-rank square system by Gaussian elimination.
    QMat gram_q(q, q);
    std::vector<std::vector<Rat>> preimages(q);
    for (std::size_t a = 0; a < q; ++a) {
      // Solve x * p = basis_a by least-structure elimination over Q.
      QMat aug(k, k + 1);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = pq(j, i);  // p^T
      for (std::size_t i = 0; i < k; ++i) aug(i, k) = Rat(basis(a, i));
      // Gaussian elimination with free variables set to zero.
      std::vector<Rat> x(k, Rat(0));
      std::size_t row = 0;
      std::vector<std::pair<std::size_t, std::size_t>> pivots;
      for (std::size_t colv = 0; colv < k && row < k; ++colv) {
        std::size_t piv = row;
        while (piv < k && aug(piv, colv) == 0) ++piv;
        if (piv == k) continue;
        for (std::size_t t = 0; t <= k; ++t) std::swap(aug(row, t), aug(piv, t));
        for (std::size_t rr = 0; rr < k; ++rr) {
          if (rr == row || aug(rr, colv) == 0) continue;
          Rat f = aug(rr, colv) / aug(row, colv);
          for (std::size_t t = colv; t <= k; ++t) aug(rr, t) -= f * aug(row, t);
        }
        pivots.emplace_back(row, colv);
        ++row;
      }
      for (std::size_t rr = row; rr < k; ++rr)
        if (aug(rr, k) != 0) throw domain_error("radical_quotient: inconsistent system");
      for (auto [rr, colv] : pivots) x[colv] = aug(rr, k) / aug(rr, colv);
      preimages[a] = std::move(x);
    }
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        // (x_a, x_b) = x_a * p * x_b^T = x_a . basis_b
        Rat s = 0;
        for (std::size_t i = 0; i < k; ++i) s += preimages[a][i] * Rat(basis(b, i));
        gram_q(a, b) = s;
      }
    IMat gram(q, q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        if (denominator(gram_q(a, b)) != 1)
          throw domain_error("radical_quotient: non-integral quotient Gram");
        gram(a, b) = numerator(gram_q(a, b));
      }
    out.lattice = IntLattice(std::move(gram));
    if (out.lattice.determinant() == 0)
      throw domain_error("radical_quotient: quotient still degenerate");
  } else {
    out.lattice = IntLattice(IMat(0, 0));
  }

  // Rank of L as a free group minus rank of the quotient.
  QMat gens(k, span.ambient_dim());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < span.ambient_dim(); ++j) gens(i, j) = span.generators[i][j];
  out.radical_dim = rank(gens) - q;
  return out;
}

int Cocycle::value(const std::vector<Int>& a, const std::vector<Int>& b) const {
  if (a.size() != rank || b.size() != rank)
    throw domain_error("Cocycle::value: coordinate length mismatch");
  std::size_t q = bits.rows();
  // pi(a) . bits . pi(b) mod 2
  std::vector<Int> pa(q, Int(0)), pb(q, Int(0));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < rank; ++i) {
      pa[j] += numerator(radical_projection(i, j)) * a[i];
      pb[j] += numerator(radical_projection(i, j)) * b[i];
    }
  Int e = 0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) e += pa[i] * bits(i, j) * pb[j];
  return e % 2 == 0 ? 1 : -1;
}

int Cocycle::commutator(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return value(a, b) * value(b, a);
}

Cocycle build_cocycle(const RationalSpan& span) {
  RadicalQuotient rq = radical_quotient(span);
  Cocycle c;
  c.rank = span.generators.size();
  c.radical_projection = rq.projection;
  c.quotient = rq.lattice;
  std::size_t q = rq.lattice.rank();
  c.bits = IMat(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < i; ++j)
      c.bits(i, j) = ((rq.lattice.gram(i, j) % 2) + 2) % 2;
  return c;
}

TwistedElement twisted_multiply(const Cocycle& c, const TwistedElement& x,
                                const TwistedElement& y) {
  TwistedElement out;
  out.group_element.resize(x.group_element.size());
  for (std::size_t i = 0; i < x.group_element.size(); ++i)
    out.group_element[i] = x.group_element[i] + y.group_element[i];
  out.scalar = x.scalar * y.scalar * Rat(c.value(x.group_element, y.group_element));
  if (out.scalar == 0) throw domain_error("twisted_multiply: zero scalar");
  return out;
}

IntLattice monoid_units(const RationalSpan& span, unsigned witness_bound) {
  std::size_t k = span.generators.size(), m = span.ambient_dim();
  // Total combinations (witness_bound+1)^k; guard against blowups.
  double logcount = k * std::log2(double(witness_bound) + 1);
  if (logcount > 22) throw domain_error("monoid_units: witness space too large");

  std::set<std::vector<Rat>> reachable;
  std::vector<unsigned> c(k, 0);
  for (;;) {
    std::vector<Rat> pt(m, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) pt[j] += Rat(c[i]) * span.generators[i][j];
    reachable.insert(std::move(pt));
    std::size_t pos = 0;
    while (pos < k && c[pos] == witness_bound) {
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++c[pos];
  }

  RationalSpan units;
  units.ambient_gram = span.ambient_gram;
  for (const auto& pt : reachable) {
    bool zero = true;
    for (const auto& x : pt)
      if (x != 0) zero = false;
    if (zero) continue;
    std::vector<Rat> neg(m);
    for (std::size_t j = 0; j < m; ++j) neg[j] = -pt[j];
    if (reachable.count(neg)) units.generators.push_back(pt);
  }
  return lattice_from_generators(units);
}

namespace {

// Iterate all coefficient vectors in [-bound, bound]^k.
template <typename F>
void for_each_coeff(std::size_t k, int bound, F&& f) {
  std::vector<Int> v(k, Int(-bound));
  if (k == 0) {
    f(v);
    return;
  }
  for (;;) {
    f(v);
    std::size_t pos = 0;
    while (pos < k && v[pos] == bound) {
      v[pos] = -bound;
      ++pos;
    }
    if (pos == k) break;
    ++v[pos];
  }
}

}  // namespace

bool cocycle_identity_holds(const Cocycle& c, int coeff_bound) {
  bool ok = true;
  for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& a) {
    if (!ok) return;
    for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& b) {
      if (!ok) return;
      for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& d) {
        if (!ok) return;
        std::vector<Int> ab(c.rank), bd(c.rank);
        for (std::size_t i = 0; i < c.rank; ++i) {
          ab[i] = a[i] + b[i];
          bd[i] = b[i] + d[i];
        }
        // f(a,b) f(a+b,d) = f(a,b+d) f(b,d)
        if (c.value(a, b) * c.value(ab, d) != c.value(a, bd) * c.value(b, d)) ok = false;
      });
    });
  });
  return ok;
}

bool commutator_identity_holds(const Cocycle& c, const QMat& pairing, int coeff_bound) {
  bool ok = true;
  for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& a) {
    if (!ok) return;
    for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& b) {
      if (!ok) return;
      Rat ip = 0;
      for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = 0; j < c.rank; ++j) ip += Rat(a[i]) * pairing(i, j) * Rat(b[j]);
      int expected = numerator(ip) % 2 == 0 ? 1 : -1;
      if (c.commutator(a, b) != expected) ok = false;
    });
  });
  return ok;
}

bool bilinearity_holds(const Cocycle& c, int coeff_bound) {
  bool ok = true;
  for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& a) {
    if (!ok) return;
    for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& b) {
      if (!ok) return;
      for_each_coeff(c.rank, coeff_bound, [&](const std::vector<Int>& d) {
        if (!ok) return;
        std::vector<Int> bd(c.rank);
        for (std::size_t i = 0; i < c.rank; ++i) bd[i] = b[i] + d[i];
        if (c.value(a, bd) != c.value(a, b) * c.value(a, d)) ok = false;
        std::vector<Int> ad(c.rank);
        for (std::size_t i = 0; i < c.rank; ++i) ad[i] = a[i] + d[i];
        if (c.value(ad, b) != c.value(a, b) * c.value(d, b)) ok = false;
      });
    });
  });
  return ok;
}

}  // namespace latmass
