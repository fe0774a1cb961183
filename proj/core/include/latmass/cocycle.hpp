#pragma once

#include "latmass/lattice.hpp"

namespace latmass {

// Bit-valued bilinear 2-cocycle on a lattice basis realizing the commutator
// (-1)^(a,b). Degenerate inputs are handled by pulling the cocycle back
// through the radical quotient.
struct Cocycle {
  std::size_t rank = 0;        // rank of the presented group (generator count)
  IMat bits;                   // q x q over {0,1}, q = rank of the quotient
  QMat radical_projection;     // q x rank map onto the nondegenerate quotient
  IntLattice quotient;         // Gram of the quotient lattice

  // f(a, b) = (-1)^(pi(a) . bits . pi(b)); a, b in generator coordinates.
  int value(const std::vector<Int>& a, const std::vector<Int>& b) const;
  int commutator(const std::vector<Int>& a, const std::vector<Int>& b) const;
};

struct TwistedElement {
  std::vector<Int> group_element;
  Rat scalar = 1;
};

struct RadicalQuotient {
  IntLattice lattice;       // nondegenerate quotient Gram
  QMat projection;          // maps generator coordinates to quotient coordinates
  std::size_t radical_dim = 0;
};

// Quotient of the span by the radical of its pairing. Requires all pairings
// integral and diagonal even; the offending generator pair is named otherwise.
RadicalQuotient radical_quotient(const RationalSpan& span);

Cocycle build_cocycle(const RationalSpan& span);

TwistedElement twisted_multiply(const Cocycle& c, const TwistedElement& x,
                                const TwistedElement& y);

// Subgroup of elements a with both a and -a expressible as N-combinations of
// the generators with coefficients <= witness_bound, as a lattice.
IntLattice monoid_units(const RationalSpan& span, unsigned witness_bound);

// Verification helpers for the cocycle laws on a coefficient-bounded sample.
bool cocycle_identity_holds(const Cocycle& c, int coeff_bound);
bool commutator_identity_holds(const Cocycle& c, const QMat& pairing, int coeff_bound);
bool bilinearity_holds(const Cocycle& c, int coeff_bound);

}  // namespace latmass
