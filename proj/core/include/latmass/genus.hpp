#pragma once

#include <string>
#include <vector>

#include "latmass/lattice.hpp"

namespace latmass {

// One Jordan constituent at a prime p: p^scale-scaled unimodular block.
struct LocalConstituent {
  int scale = 0;       // exponent e, block is p^e * (unimodular)
  unsigned dim = 0;
  int det_class = 1;   // +-1; at p=2 this is +1 iff unit det is +-1 mod 8
  bool even = true;    // p = 2 only; always true at odd p
  int oddity = 0;      // p = 2, type I only; trace invariant mod 8
};

struct LocalSymbol {
  Int prime = 2;
  std::vector<LocalConstituent> constituents;  // increasing scale, dim > 0
};

struct GenusSymbol {
  unsigned n_plus = 0;
  unsigned n_minus = 0;
  std::vector<LocalSymbol> locals;  // increasing prime order, only p | 2 det

  unsigned rank() const { return n_plus + n_minus; }
  bool operator==(const GenusSymbol& o) const;
};

// Raw 2-adic or p-adic Jordan data for a lattice (not canonicalized).
// Exposed for the mass computation, which consumes Jordan data directly.
LocalSymbol jordan_decomposition(const IntLattice& l, const Int& p);

// Canonical symbol; equal symbols <=> same genus. Requires a nondegenerate
// lattice. For indefinite input the signature is computed exactly.
GenusSymbol genus_symbol(const IntLattice& l);

bool same_genus(const IntLattice& a, const IntLattice& b);

// Determinant of any lattice with this symbol (sign from the signature).
Int symbol_determinant(const GenusSymbol& s);

std::string format_symbol(const GenusSymbol& s);
GenusSymbol parse_symbol(const std::string& text);

// In-place canonicalization of 2-adic data (oddity fusion + sign walking).
void canonicalize_2adic(LocalSymbol& sym);

}  // namespace latmass
