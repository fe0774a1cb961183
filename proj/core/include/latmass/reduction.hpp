#pragma once

#include "latmass/lattice.hpp"

namespace latmass {

struct ReducedLattice {
  IntLattice lattice;  // Gram in the reduced basis
  IMat transform;      // rows express the reduced basis in the old one
};

// Exact LLL on the Gram matrix (delta = 99/100), entirely in rational
// arithmetic. Used to condition bases before backtracking searches and to
// give neighbors a small deterministic Gram; no reduction-quality claims.
ReducedLattice lll_reduce(const IntLattice& l);

}  // namespace latmass
