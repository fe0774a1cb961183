#include "latmass/genus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latmass {

namespace {

int val_p(const Rat& x, const Int& p) {
  if (x == 0) throw domain_error("val_p of zero");
  return valuation(numerator(x), p) - valuation(denominator(x), p);
}

// Unit part of x at p as an integer mod p^3 (enough for mod-8 classes and
// Legendre symbols): x = p^v * num/den with den prime to p.
Int unit_mod(const Rat& x, const Int& p, const Int& modulus) {
  Int num = numerator(x), den = denominator(x);
  int vn = valuation(num, p);
  for (int i = 0; i < vn; ++i) num /= p;
  int vd = valuation(den, p);
  for (int i = 0; i < vd; ++i) den /= p;
  // den^-1 mod modulus by brute force; modulus is tiny (8 or p).
  Int dm = ((den % modulus) + modulus) % modulus;
  Int inv = 0;
  for (Int c = 1; c < modulus; ++c)
    if ((dm * c) % modulus == 1) {
      inv = c;
      break;
    }
  if (inv == 0) throw domain_error("unit_mod: divisor not a unit");
  return ((num % modulus) * inv % modulus + modulus) % modulus;
}

struct Block1 {
  int scale;
  Int unit8_or_legendre;  // p=2: unit mod 8; odd p: +-1
};
struct Block2 {
  int scale;
  bool is_V;  // det unit 3 mod 8 => V, 7 mod 8 => U
};

// Symmetric congruence: row/col k -= c * (row/col j).
void sym_axpy(QMat& q, std::size_t k, std::size_t j, const Rat& c) {
  std::size_t n = q.rows();
  for (std::size_t t = 0; t < n; ++t) q(k, t) -= c * q(j, t);
  for (std::size_t t = 0; t < n; ++t) q(t, k) -= c * q(t, j);
}

void sym_swap(QMat& q, std::size_t a, std::size_t b) {
  if (a == b) return;
  std::size_t n = q.rows();
  for (std::size_t t = 0; t < n; ++t) std::swap(q(a, t), q(b, t));
  for (std::size_t t = 0; t < n; ++t) std::swap(q(t, a), q(t, b));
}

}  // namespace

LocalSymbol jordan_decomposition(const IntLattice& l, const Int& p) {
  if (p < 2 || !is_prime(p)) throw domain_error("jordan_decomposition: p must be prime");
  if (l.determinant() == 0) throw domain_error("jordan_decomposition: degenerate lattice");
  std::size_t n = l.rank();
  QMat q = l.gram.cast<Rat>();
  bool two = (p == 2);

  std::vector<Block1> ones;
  std::vector<Block2> twos;
  std::size_t done = 0;  // rows/cols < done are finished

  while (done < n) {
    // Locate minimal valuation in the active block.
    int vmin = 0;
    bool found = false;
    std::size_t bi = done, bj = done;
    bool diag_attains = false;
    std::size_t diag_idx = done;
    for (std::size_t i = done; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (q(i, j) == 0) continue;
        int v = val_p(q(i, j), p);
        if (!found || v < vmin) {
          vmin = v;
          found = true;
          bi = i;
          bj = j;
          diag_attains = (i == j);
          diag_idx = i;
        } else if (v == vmin && i == j && !diag_attains) {
          diag_attains = true;
          diag_idx = i;
        }
      }
    if (!found) throw domain_error("jordan_decomposition: degenerate block");

    if (diag_attains || !two) {
      std::size_t piv;
      if (diag_attains) {
        piv = diag_idx;
      } else {
        // Odd p: fold the off-diagonal minimum onto the diagonal.
        sym_axpy(q, bi, bj, Rat(-1));  // row/col bi += row/col bj
        piv = bi;
        if (val_p(q(piv, piv), p) != vmin)
          throw domain_error("jordan_decomposition: pivot lift failed");
      }
      sym_swap(q, done, piv);
      for (std::size_t k = done + 1; k < n; ++k) {
        if (q(k, done) == 0) continue;
        sym_axpy(q, k, done, q(k, done) / q(done, done));
      }
      Int cls = two ? unit_mod(q(done, done), 2, 8)
                    : Int(kronecker(unit_mod(q(done, done), p, p), p));
      ones.push_back({vmin, cls});
      ++done;
    } else {
      // p = 2, minimal valuation strictly off-diagonal: even 2x2 block.
      sym_swap(q, done, bi);
      sym_swap(q, done + 1, bj == done ? bi : bj);
      Rat a = q(done, done), b = q(done, done + 1), c = q(done + 1, done + 1);
      Rat detb = a * c - b * b;
      for (std::size_t k = done + 2; k < n; ++k) {
        Rat r0 = q(k, done), r1 = q(k, done + 1);
        if (r0 == 0 && r1 == 0) continue;
        // [x, y] = [r0, r1] * B^{-1}
        Rat x = (r0 * c - r1 * b) / detb;
        Rat y = (r1 * a - r0 * b) / detb;
        for (std::size_t t = 0; t < n; ++t)
          q(k, t) -= x * q(done, t) + y * q(done + 1, t);
        for (std::size_t t = 0; t < n; ++t) q(t, k) = q(k, t);
      }
      Int d8 = unit_mod(detb, 2, 8);
      if (val_p(detb, 2) != 2 * vmin || (d8 != 3 && d8 != 7))
        throw domain_error("jordan_decomposition: unexpected even block determinant");
      twos.push_back({vmin, d8 == 3});
      done += 2;
    }
  }

  // Aggregate per scale.
  struct Agg {
    unsigned dim = 0;
    Int det8 = 1;     // p=2: product of units mod 8
    int legendre = 1; // odd p
    bool has_odd = false;
    Int oddity = 0;
  };
  std::map<int, Agg> agg;
  for (const auto& blk : ones) {
    auto& a = agg[blk.scale];
    a.dim += 1;
    if (two) {
      a.det8 = a.det8 * blk.unit8_or_legendre % 8;
      a.oddity = (a.oddity + blk.unit8_or_legendre) % 8;
      a.has_odd = true;
    } else {
      a.legendre *= int(blk.unit8_or_legendre);
    }
  }
  for (const auto& blk : twos) {
    auto& a = agg[blk.scale];
    a.dim += 2;
    a.det8 = a.det8 * (blk.is_V ? 3 : 7) % 8;
    if (blk.is_V) a.oddity = (a.oddity + 4) % 8;
  }

  LocalSymbol sym;
  sym.prime = p;
  for (const auto& [scale, a] : agg) {
    LocalConstituent c;
    c.scale = scale;
    c.dim = a.dim;
    if (two) {
      c.det_class = (a.det8 == 1 || a.det8 == 7) ? 1 : -1;
      c.even = !a.has_odd;
      c.oddity = c.even ? 0 : int(a.oddity % 8);
    } else {
      c.det_class = a.legendre;
      c.even = true;
      c.oddity = 0;
    }
    sym.constituents.push_back(c);
  }
  return sym;
}

void canonicalize_2adic(LocalSymbol& sym) {
  if (sym.prime != 2 || sym.constituents.empty()) return;
  auto& cs = sym.constituents;
  std::sort(cs.begin(), cs.end(),
            [](const LocalConstituent& a, const LocalConstituent& b) { return a.scale < b.scale; });

  int max_scale = cs.back().scale;
  // Dense views over the scale line; absent scales are dim-0 type II blocks.
  auto at = [&](int scale) -> LocalConstituent* {
    for (auto& c : cs)
      if (c.scale == scale) return &c;
    return nullptr;
  };
  auto is_type1 = [&](int scale) {
    auto* c = at(scale);
    return c != nullptr && !c->even;
  };

  // Compartments: maximal runs of consecutive type-I scales. Fuse oddities
  // onto the first member.
  std::vector<std::pair<int, int>> compartments;  // [lo, hi] scales
  for (int s = 0; s <= max_scale; ++s) {
    if (!is_type1(s)) continue;
    if (!compartments.empty() && compartments.back().second == s - 1)
      compartments.back().second = s;
    else
      compartments.emplace_back(s, s);
  }
  auto compartment_head = [&](int scale) -> LocalConstituent* {
    for (auto& [lo, hi] : compartments)
      if (scale >= lo && scale <= hi) return at(lo);
    return nullptr;
  };
  for (auto& [lo, hi] : compartments) {
    int total = 0;
    for (int s = lo; s <= hi; ++s) {
      total = (total + at(s)->oddity) % 8;
      at(s)->oddity = 0;
    }
    at(lo)->oddity = total;
  }

  // Trains: scales s and s+1 linked iff at least one of the two blocks is
  // type I (dim-0 blocks are type II). Only nonzero-dim members are walkable.
  std::vector<std::vector<int>> trains;
  {
    std::vector<int> current;
    for (int s = 0; s <= max_scale; ++s) {
      if (current.empty()) {
        current.push_back(s);
      } else if (is_type1(s - 1) || is_type1(s)) {
        current.push_back(s);
      } else {
        trains.push_back(current);
        current = {s};
      }
    }
    trains.push_back(current);
  }

  // Sign walking: flip(a, b) toggles both det classes and adds 4 to the
  // compartment oddity of each type-I endpoint. Push all minus signs onto
  // each train's first nonzero-dim member.
  for (const auto& train : trains) {
    std::vector<LocalConstituent*> members;
    for (int s : train) {
      auto* c = at(s);
      if (c != nullptr && c->dim > 0) members.push_back(c);
    }
    if (members.size() < 2) continue;
    for (std::size_t k = members.size(); k-- > 1;) {
      if (members[k]->det_class == 1) continue;
      auto flip = [&](LocalConstituent* c) {
        c->det_class = -c->det_class;
        if (!c->even) {
          auto* head = compartment_head(c->scale);
          head->oddity = (head->oddity + 4) % 8;
        }
      };
      flip(members[k]);
      flip(members[k - 1]);
    }
  }
}

namespace {

// Exact signature by symmetric reduction over Q.
std::pair<unsigned, unsigned> signature_of(const IMat& gram) {
  QMat q = gram.cast<Rat>();
  std::size_t n = q.rows();
  unsigned np = 0, nm = 0;
  std::size_t done = 0;
  while (done < n) {
    std::size_t piv = n;
    for (std::size_t i = done; i < n; ++i)
      if (q(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // All active diagonal entries vanish; lift an off-diagonal one.
      bool lifted = false;
      for (std::size_t i = done; i < n && !lifted; ++i)
        for (std::size_t j = i + 1; j < n && !lifted; ++j)
          if (q(i, j) != 0) {
            sym_axpy(q, i, j, Rat(-1));
            lifted = true;
          }
      if (!lifted) throw domain_error("signature: degenerate form");
      continue;
    }
    sym_swap(q, done, piv);
    for (std::size_t k = done + 1; k < n; ++k) {
      if (q(k, done) == 0) continue;
      sym_axpy(q, k, done, q(k, done) / q(done, done));
    }
    if (q(done, done) > 0)
      ++np;
    else
      ++nm;
    ++done;
  }
  return {np, nm};
}

}  // namespace

GenusSymbol genus_symbol(const IntLattice& l) {
  if (l.determinant() == 0) throw domain_error("genus_symbol: degenerate lattice");
  if (!l.is_even()) throw domain_error("genus_symbol: even lattices only");
  GenusSymbol s;
  if (l.rank() == 0) return s;
  auto [np, nm] = signature_of(l.gram);
  s.n_plus = np;
  s.n_minus = nm;
  Int d = l.determinant();
  if (d < 0) d = -d;
  std::vector<Int> primes{2};
  for (const auto& [p, e] : factorize(d))
    if (p != 2) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    LocalSymbol ls = jordan_decomposition(l, p);
    if (p == 2) canonicalize_2adic(ls);
    s.locals.push_back(std::move(ls));
  }
  return s;
}

bool GenusSymbol::operator==(const GenusSymbol& o) const {
  if (n_plus != o.n_plus || n_minus != o.n_minus) return false;
  if (locals.size() != o.locals.size()) return false;
  for (std::size_t i = 0; i < locals.size(); ++i) {
    const auto& a = locals[i];
    const auto& b = o.locals[i];
    if (a.prime != b.prime) return false;
    if (a.constituents.size() != b.constituents.size()) return false;
    for (std::size_t j = 0; j < a.constituents.size(); ++j) {
      const auto& x = a.constituents[j];
      const auto& y = b.constituents[j];
      if (x.scale != y.scale || x.dim != y.dim || x.det_class != y.det_class ||
          x.even != y.even || x.oddity != y.oddity)
        return false;
    }
  }
  return true;
}

bool same_genus(const IntLattice& a, const IntLattice& b) {
  return genus_symbol(a) == genus_symbol(b);
}

Int symbol_determinant(const GenusSymbol& s) {
  Int d = 1;
  for (const auto& ls : s.locals)
    for (const auto& c : ls.constituents)
      for (unsigned i = 0; i < c.dim; ++i)
        for (int e = 0; e < c.scale; ++e) d *= ls.prime;
  if (s.n_minus % 2 == 1) d = -d;
  return d;
}

std::string format_symbol(const GenusSymbol& s) {
  std::ostringstream out;
  out << "II_{" << s.n_plus << "," << s.n_minus << "}";
  std::vector<std::string> tokens;
  for (const auto& ls : s.locals) {
    for (const auto& c : ls.constituents) {
      if (c.scale == 0) continue;  // implicit in rank and determinant
      Int q = 1;
      for (int e = 0; e < c.scale; ++e) q *= ls.prime;
      std::ostringstream t;
      t << q.str() << "^" << (c.det_class > 0 ? "+" : "-") << c.dim;
      if (ls.prime == 2 && !c.even) t << "_" << c.oddity;
      tokens.push_back(t.str());
    }
  }
  if (!tokens.empty()) {
    out << "(";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out << " ";
      out << tokens[i];
    }
    out << ")";
  }
  return out.str();
}

GenusSymbol parse_symbol(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw parse_error(msg, pos); };
  auto expect = [&](const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) != 0) fail("expected '" + lit + "'");
    pos += lit.size();
  };
  auto read_uint = [&]() -> Int {
    std::size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  };

  expect("II_{");
  Int np = read_uint();
  expect(",");
  Int nm = read_uint();
  expect("}");

  struct Token {
    Int p;
    int scale;
    int sign;
    unsigned dim;
    bool has_oddity = false;
    int oddity = 0;
  };
  std::vector<Token> tokens;
  if (pos < text.size()) {
    expect("(");
    while (true) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      Token t;
      Int q = read_uint();
      auto f = factorize(q);
      if (f.size() != 1 || q < 2) fail("scale must be a prime power > 1");
      t.p = f[0].first;
      t.scale = f[0].second;
      expect("^");
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        fail("expected sign");
      t.sign = text[pos] == '+' ? 1 : -1;
      ++pos;
      t.dim = unsigned(read_uint());
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        t.has_oddity = true;
        t.oddity = int(read_uint() % 8);
      }
      tokens.push_back(t);
    }
    if (tokens.empty()) fail("empty constituent list");
  }
  if (pos != text.size()) fail("trailing characters");

  GenusSymbol s;
  s.n_plus = unsigned(np);
  s.n_minus = unsigned(nm);
  unsigned rank = s.n_plus + s.n_minus;

  std::map<Int, std::vector<Token>> by_prime;
  for (const auto& t : tokens) by_prime[t.p].push_back(t);
  if (by_prime.find(2) == by_prime.end()) by_prime[2] = {};

  // |det| = prod over tokens of q^dim; the sign comes from the signature.
  Int absdet = 1;
  for (const auto& t : tokens)
    for (unsigned i = 0; i < t.dim; ++i)
      for (int e = 0; e < t.scale; ++e) absdet *= t.p;
  Int sdet = (s.n_minus % 2 == 1) ? -absdet : absdet;

  for (auto& [p, toks] : by_prime) {
    LocalSymbol ls;
    ls.prime = p;
    unsigned scaled_dim = 0;
    for (const auto& t : toks) {
      if (t.scale == 0) fail("scale-0 constituents are implicit");
      scaled_dim += t.dim;
    }
    if (scaled_dim > rank) fail("constituent dimensions exceed rank");
    int vp = 0;
    for (const auto& t : toks) vp += t.scale * int(t.dim);
    // Unit part of det at p determines the implicit scale-0 sign.
    Int unit = sdet;
    for (int i = 0; i < vp; ++i) unit /= p;
    int unit_sign;
    Int prod_signs = 1;
    if (p == 2) {
      Int u8 = ((unit % 8) + 8) % 8;
      unit_sign = (u8 == 1 || u8 == 7) ? 1 : -1;
    } else {
      unit_sign = kronecker(unit, p);
    }
    for (const auto& t : toks) prod_signs *= t.sign;
    if (scaled_dim < rank) {
      LocalConstituent c0;
      c0.scale = 0;
      c0.dim = rank - scaled_dim;
      c0.det_class = int(unit_sign * prod_signs);
      c0.even = true;  // even-lattice symbols only
      c0.oddity = 0;
      ls.constituents.push_back(c0);
    } else if (unit_sign != prod_signs) {
      fail("inconsistent determinant signs");
    }
    for (const auto& t : toks) {
      LocalConstituent c;
      c.scale = t.scale;
      c.dim = t.dim;
      c.det_class = t.sign;
      c.even = !(p == 2 && t.has_oddity);
      c.oddity = t.has_oddity ? t.oddity : 0;
      ls.constituents.push_back(c);
    }
    std::sort(ls.constituents.begin(), ls.constituents.end(),
              [](const LocalConstituent& a, const LocalConstituent& b) {
                return a.scale < b.scale;
              });
    if (p == 2) canonicalize_2adic(ls);
    s.locals.push_back(std::move(ls));
  }
  std::sort(s.locals.begin(), s.locals.end(),
            [](const LocalSymbol& a, const LocalSymbol& b) { return a.prime < b.prime; });
  return s;
}

}  // namespace latmass
