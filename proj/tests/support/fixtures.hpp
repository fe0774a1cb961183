#pragma once

#include <algorithm>
#include <functional>

#include <latmass/autom.hpp>
#include <latmass/liedata.hpp>
#include <latmass/shortvec.hpp>

namespace latmass::testing {

inline IntLattice e8() { return root_lattice(SimpleType::E, 8); }
inline IntLattice a_n(unsigned n) { return root_lattice(SimpleType::A, n); }
inline IntLattice d_n(unsigned n) { return root_lattice(SimpleType::D, n); }

inline IntLattice a1_pow(unsigned n) {
  IntLattice l(IMat(0, 0));
  for (unsigned i = 0; i < n; ++i) l = direct_sum(l, a_n(1));
  return l;
}

inline IntLattice diag_lattice(std::vector<Int> entries) {
  IMat g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return IntLattice(std::move(g));
}

inline IntLattice sqrt2(const IntLattice& l) { return rescale(l, 2); }

// Brute-force automorphism count for tiny lattices: enumerate all tuples of
// short vectors matching the Gram matrix. Independent of the backtracking
// implementation; exponential, keep rank <= 3.
inline Int brute_force_aut_order(const IntLattice& l) {
  std::size_t n = l.rank();
  Int maxdiag = 0;
  for (std::size_t i = 0; i < n; ++i) maxdiag = std::max(maxdiag, l.gram(i, i));
  auto classes = short_vectors(l, maxdiag);
  std::vector<IVec> all;
  for (auto& [norm, vs] : classes)
    for (auto& v : vs) all.push_back(v);
  Int count = 0;
  std::vector<const IVec*> chosen(n, nullptr);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      count += 1;
      return;
    }
    for (const auto& v : all) {
      if (bilinear(l.gram, v, v) != l.gram(k, k)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = bilinear(l.gram, *chosen[j], v) == l.gram(j, k);
      if (!ok) continue;
      chosen[k] = &v;
      rec(k + 1);
    }
    chosen[k] = nullptr;
  };
  rec(0);
  return count;
}

}  // namespace latmass::testing
