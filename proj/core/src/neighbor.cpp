#include "latmass/neighbor.hpp"

#include <algorithm>
#include <future>

#include "latmass/genus.hpp"
#include "latmass/reduction.hpp"
#include "latmass/shortvec.hpp"

namespace latmass {

namespace {

long p_long(const Int& p) { return long(p); }

// Deterministic iterator over projective isotropic lines of (L, q) mod p:
// representatives have first nonzero coordinate equal to 1 and are emitted
// in lexicographic order.
class IsotropicLines {
public:
  IsotropicLines(const IMat& gram, const Int& p)
      : n_(gram.rows()), p_(p_long(p)), gram_(n_, std::vector<long>(n_)) {
    // Entries mod 2p: the evenness-aware isotropy test is (v,v) = 0 mod 2p.
    Int m = 2 * p;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        gram_[i][j] = long(((gram(i, j) % m) + m) % m);
    pivot_ = 0;
    digits_.assign(n_, 0);
    digits_[0] = 1;
    fresh_ = true;
  }

  // Next isotropic representative; empty when exhausted.
  std::optional<std::vector<long>> next() {
    while (true) {
      if (!fresh_ && !advance()) return std::nullopt;
      fresh_ = false;
      if (is_isotropic()) return digits_;
    }
  }

private:
  bool advance() {
    // Odometer over positions pivot_+1 .. n-1.
    for (std::size_t i = n_; i-- > pivot_ + 1;) {
      if (digits_[i] + 1 < p_) {
        ++digits_[i];
        return true;
      }
      digits_[i] = 0;
    }
    // Move the pivot.
    if (pivot_ + 1 >= n_) return false;
    digits_[pivot_] = 0;
    ++pivot_;
    digits_[pivot_] = 1;
    return true;
  }

  bool is_isotropic() const {
    // q(x) = (x, x)/2 = 0 mod p, tested as (x, x) = 0 mod 2p.
    long m = 2 * p_;
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (digits_[i] == 0) continue;
      long row = 0;
      for (std::size_t j = 0; j < n_; ++j) row = (row + gram_[i][j] * digits_[j]) % m;
      s = (s + digits_[i] * row) % m;
    }
    return s % m == 0;
  }

  std::size_t n_;
  long p_;
  std::vector<std::vector<long>> gram_;
  std::size_t pivot_;
  std::vector<long> digits_;
  bool fresh_;
};

// p-neighbor of l along the isotropic line spanned by x (coords mod p).
IntLattice neighbor_of(const IntLattice& l, const Int& p, const std::vector<long>& x) {
  std::size_t n = l.rank();
  const IMat& g = l.gram;
  IVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = x[i];

  auto ip = [&](const IVec& a, const IVec& b) { return bilinear(g, a, b); };

  // Adjust v so that (v,v) = 0 mod 2p^2 (mod 8 for p = 2).
  Int vv = ip(v, v);
  Int target_mod = 2 * p * p;
  if (vv % target_mod != 0) {
    // u = G v mod p; pick j with u_j invertible.
    std::size_t j = n;
    Int uj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Int u = 0;
      for (std::size_t k = 0; k < n; ++k) u += g(i, k) * v[k];
      if (u % p != 0) {
        j = i;
        uj = ((u % p) + p) % p;
        break;
      }
    }
    if (j == n) throw domain_error("kneser_neighbors: line not primitive (p | det?)");
    if (p == 2) {
      // (v + 2w)^2 = v^2 + 4(v,w) + 4(w,w), (w,w) even: need (v,w) = v^2/4 mod 2.
      Int t = (vv / 4) % 2;
      if (t != 0) {
        v[j] += 2;
        // recompute below
      }
    } else {
      // (v + pw)^2 = v^2 + 2p(v,w) + p^2(w,w): kill t := (v^2/(2p)) + (v,w) mod p.
      Int t = ((vv / (2 * p)) % p + p) % p;
      // choose w = c e_j with c = -t * uj^{-1} mod p
      Int inv = 0;
      for (Int c = 1; c < p; ++c)
        if ((uj * c) % p == 1) {
          inv = c;
          break;
        }
      Int c = ((p - t) * inv) % p;
      v[j] += p * c;
    }
    vv = ip(v, v);
    if (vv % target_mod != 0)
      throw domain_error("kneser_neighbors: norm adjustment failed");
  }

  // p * N = p * {y : (y,v) = 0 mod p} + Z v, via HNF of the stacked rows.
  IMat rows(n + 1, n);
  // Basis of M: pick j with (Gv)_j a unit mod p; rows e_i - (u_i/u_j) e_j, p e_j.
  std::vector<Int> u(n);
  std::size_t j = n;
  Int uj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k) s += g(i, k) * v[k];
    u[i] = ((s % p) + p) % p;
    if (j == n && u[i] != 0) {
      j = i;
      uj = u[i];
    }
  }
  if (j == n) throw domain_error("kneser_neighbors: degenerate line");
  Int inv = 0;
  for (Int c = 1; c < p; ++c)
    if ((uj * c) % p == 1) {
      inv = c;
      break;
    }
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j) continue;
    // p * (e_i - (u_i/u_j) e_j)
    rows(r, i) = p;
    rows(r, j) = -(((u[i] * inv) % p) * p);
    ++r;
  }
  for (std::size_t k = 0; k < n; ++k) rows(r, k) = 0;
  rows(r, j) = p * p;
  ++r;
  for (std::size_t k = 0; k < n; ++k) rows(r, k) = v[k];

  IMat basis = row_basis_hnf(rows);
  if (basis.rows() != n) throw domain_error("kneser_neighbors: neighbor basis rank drop");
  // Gram of N = (B G B^T) / p^2.
  IMat gram_scaled = basis * g * basis.transposed();
  IMat gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Int e = gram_scaled(a, b);
      if (e % (p * p) != 0) throw domain_error("kneser_neighbors: non-integral neighbor");
      gram(a, b) = e / (p * p);
    }
  return IntLattice(std::move(gram));
}

}  // namespace

std::vector<IntLattice> kneser_neighbors(const IntLattice& l, const Int& p) {
  if (!is_prime(p)) throw domain_error("kneser_neighbors: p must be prime");
  if (!l.is_even() || !l.is_positive_definite())
    throw domain_error("kneser_neighbors: even positive-definite lattice required");
  Int d = l.determinant();
  if (d % p == 0) throw domain_error("kneser_neighbors: p divides det");
  std::vector<IntLattice> out;
  IsotropicLines lines(l.gram, p);
  while (auto x = lines.next()) {
    IntLattice nb = neighbor_of(l, p, *x);
    out.push_back(lll_reduce(nb).lattice);
  }
  return out;
}

GenusEnumeration enumerate_genus(const IntLattice& l, const EnumerateOptions& opts) {
  if (!l.is_even() || !l.is_positive_definite())
    throw domain_error("enumerate_genus: even positive-definite lattice required");
  if (l.rank() < 3) throw domain_error("enumerate_genus: rank >= 3 required");
  Int d = l.determinant();

  Int p;
  if (opts.prime) {
    p = *opts.prime;
    if (!is_prime(p) || d % p == 0 || p == 2)
      throw domain_error("enumerate_genus: invalid neighbor prime");
  } else {
    p = 3;
    while ((2 * d) % p == 0) p = next_prime(p);
  }

  GenusEnumeration result;
  if (!opts.exhaustive_closure) result.target_mass = sms_mass(genus_symbol(l));

  struct Entry {
    IntLattice rep;
    Int aut;
    std::vector<Int> invariants;  // norm 2 and norm 4 counts
    std::unique_ptr<IsotropicLines> lines;
    bool exhausted = false;
  };
  auto invariants_of = [&](const IntLattice& lat) { return norm_counts(lat, 4); };

  std::vector<Entry> registry;
  auto add_class = [&](IntLattice lat, std::vector<Int> inv) {
    Entry e;
    e.rep = std::move(lat);
    e.aut = aut_order(e.rep).order;
    e.invariants = std::move(inv);
    e.lines = std::make_unique<IsotropicLines>(e.rep.gram, p);
    registry.push_back(std::move(e));
    result.accumulated_mass.value += Rat(1) / Rat(registry.back().aut);
  };

  IntLattice seed = lll_reduce(l).lattice;
  seed.label = "";
  add_class(seed, invariants_of(seed));

  auto mass_reached = [&]() {
    return !opts.exhaustive_closure &&
           result.accumulated_mass.value == result.target_mass.value;
  };
  auto mass_overrun = [&]() {
    return !opts.exhaustive_closure &&
           result.accumulated_mass.value > result.target_mass.value;
  };
  if (mass_overrun()) throw domain_error("enumerate_genus: mass overrun at seed");

  const std::size_t batch = std::max<std::size_t>(16, 16 * opts.workers);
  std::size_t cursor = 0;  // round-robin over classes
  bool done = mass_reached();

  while (!done) {
    // Find the next class with lines remaining.
    std::size_t tried = 0;
    while (tried < registry.size() && registry[cursor % registry.size()].exhausted) {
      ++cursor;
      ++tried;
    }
    if (tried == registry.size()) break;  // neighbor closure reached
    Entry& cls = registry[cursor % registry.size()];
    ++cursor;

    std::vector<std::vector<long>> lines;
    for (std::size_t i = 0; i < batch; ++i) {
      auto x = cls.lines->next();
      if (!x) {
        cls.exhausted = true;
        break;
      }
      lines.push_back(std::move(*x));
    }
    if (lines.empty()) continue;
    if (result.neighbors_evaluated + Int(lines.size()) > opts.budget) break;  // partial

    // Parallel map: construct, reduce, invariants. Deterministic fold below.
    struct Cand {
      IntLattice lat;
      std::vector<Int> inv;
    };
    const IntLattice rep_copy = cls.rep;  // stable snapshot for workers
    std::vector<Cand> cands(lines.size());
    auto work = [&](std::size_t i) {
      IntLattice nb = neighbor_of(rep_copy, p, lines[i]);
      cands[i].lat = lll_reduce(nb).lattice;
      cands[i].inv = invariants_of(cands[i].lat);
    };
    if (opts.workers <= 1 || lines.size() == 1) {
      for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::future<void>> futs;
      for (unsigned w = 0; w < opts.workers; ++w)
        futs.push_back(std::async(std::launch::async, [&]() {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            work(i);
          }
        }));
      for (auto& f : futs) f.get();
    }

    for (auto& cand : cands) {
      result.neighbors_evaluated += 1;
      bool known = false;
      for (const Entry& e : registry) {
        if (e.invariants != cand.inv) continue;
        if (is_isometric(e.rep, cand.lat).found()) {
          known = true;
          break;
        }
      }
      if (known) continue;
      add_class(std::move(cand.lat), std::move(cand.inv));
      if (mass_overrun())
        throw domain_error("enumerate_genus: accumulated mass exceeds target");
      if (mass_reached()) {
        done = true;
        break;
      }
    }
  }

  result.complete = opts.exhaustive_closure
                        ? std::all_of(registry.begin(), registry.end(),
                                      [](const Entry& e) { return e.exhausted; })
                        : mass_reached();
  if (opts.exhaustive_closure) result.target_mass = result.accumulated_mass;

  for (auto& e : registry) result.classes.push_back({std::move(e.rep), e.aut});
  std::sort(result.classes.begin(), result.classes.end(), [](const GenusClass& a, const GenusClass& b) {
    if (a.aut_order != b.aut_order) return a.aut_order > b.aut_order;
    return a.representative.gram.lex_less(b.representative.gram);
  });
  for (std::size_t i = 0; i < result.classes.size(); ++i)
    result.classes[i].representative.label = "class" + std::to_string(i);
  return result;
}

}  // namespace latmass
