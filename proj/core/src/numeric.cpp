#include "latmass/numeric.hpp"

#include <map>

namespace latmass {

Int isqrt_floor(const Int& n) {
  if (n < 0) throw domain_error("isqrt_floor: negative argument");
  if (n == 0) return 0;
  Int r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw domain_error("floor_div: zero divisor");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

int valuation(Int n, const Int& p) {
  if (n == 0) throw domain_error("valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Int next_prime(Int n) {
  if (n < 2) return 2;
  ++n;
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n == 0) throw domain_error("factorize: zero argument");
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int v = valuation(n, 2);
    n >>= v;
    Int am8 = ((a % 8) + 8) % 8;
    if (v % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
  }
  // Jacobi symbol (a|n) for odd positive n via reciprocity.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    int v = valuation(a, 2);
    a >>= v;
    Int nm8 = n % 8;
    if (v % 2 == 1 && (nm8 == 3 || nm8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

Int fundamental_discriminant(const Int& D) {
  if (D == 0) throw domain_error("fundamental_discriminant: zero");
  Int m = D < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(D)) {
    if (e % 2 == 1) m *= p;
  }
  // m is the squarefree part of D; promote to a discriminant.
  Int mm4 = ((m % 4) + 4) % 4;
  return mm4 == 1 ? m : 4 * m;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Rat bernoulli(unsigned k) {
  static std::map<unsigned, Rat> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // B_0..B_k by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
  std::vector<Rat> b(k + 1);
  for (unsigned m = 0; m <= k; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -s / Rat(m + 1);
  }
  for (unsigned m = 0; m <= k; ++m) cache.emplace(m, b[m]);
  return b[k];
}

Rat bernoulli_poly(unsigned k, const Rat& x) {
  Rat s = 0;
  Rat xpow = 1;
  // sum_i C(k,i) B_{k-i} x^i
  for (unsigned i = 0; i <= k; ++i) {
    s += Rat(binomial(k, i)) * bernoulli(k - i) * xpow;
    xpow *= x;
  }
  return s;
}

Rat bernoulli_chi(unsigned k, const Int& d0) {
  if (d0 == 1) return bernoulli(k);
  Int f = d0 < 0 ? -d0 : d0;
  Rat s = 0;
  for (Int a = 1; a <= f; ++a) {
    int chi = kronecker(d0, a);
    if (chi == 0) continue;
    s += Rat(chi) * bernoulli_poly(k, Rat(a) / Rat(f));
  }
  // B_{k,chi} = f^{k-1} sum_a chi(a) B_k(a/f)
  Rat fp = 1;
  for (unsigned i = 1; i < k; ++i) fp *= Rat(f);
  if (k == 0) fp = Rat(1) / Rat(f);
  return fp * s;
}

}  // namespace latmass
