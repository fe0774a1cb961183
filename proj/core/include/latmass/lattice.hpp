#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmass/matrix.hpp"
#include "latmass/numeric.hpp"

namespace latmass {

// Integral lattice given by the Gram matrix of a basis. All lattice identity
// in this library is up to isometry; there is no floating ambient basis.
struct IntLattice {
  IMat gram;
  std::string label;

  IntLattice() = default;
  IntLattice(IMat g, std::string l = "") : gram(std::move(g)), label(std::move(l)) {
    if (!gram.is_symmetric()) throw domain_error("IntLattice: gram must be symmetric");
  }

  std::size_t rank() const { return gram.rows(); }
  Int determinant() const { return det(gram); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }

  // Positive definite iff all leading principal minors are positive.
  bool is_positive_definite() const;
  bool is_nondegenerate() const { return determinant() != 0; }
};

// A set of (possibly dependent) rational generators inside an ambient
// rational quadratic space.
struct RationalSpan {
  QMat ambient_gram;                   // m x m, symmetric
  std::vector<std::vector<Rat>> generators;  // each of length m

  std::size_t ambient_dim() const { return ambient_gram.rows(); }
  // Pairing matrix of the generators.
  QMat pairing() const;
};

struct DiscriminantGroup {
  std::vector<Int> elementary_divisors;  // d1 | d2 | ..., entries > 1
  Int order = 1;
};

IntLattice hyperbolic_plane();

// Gram of the simple-type long-root lattice Q_g in the <theta,theta> = 2
// normalization: the root lattice for A/D/E, D_n for B_n, A_1^n for C_n,
// D_4 for F_4, A_2 for G_2. Declared here, defined with the Lie data.
// (see liedata.hpp)

IntLattice rescale(const IntLattice& l, const Int& k);
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

// Even unimodular glue D_n (union) D_n + (1/2,...,1/2); requires 8 | n.
IntLattice d_plus(unsigned n);

struct SpanReduction {
  IntLattice lattice;   // Gram of a basis of the generated Z-module
  QMat basis;           // rows: basis vectors in ambient coordinates
  bool integral = true; // false when some pairing is not an integer
};

// Basis extraction for the Z-module generated by span.generators, by integer
// row reduction after clearing denominators. Throws on a degenerate span,
// carrying the radical dimension in the message.
SpanReduction span_basis(const RationalSpan& span);

// As span_basis, but returns only the lattice and requires integrality.
IntLattice lattice_from_generators(const RationalSpan& span);

DiscriminantGroup dual_and_discriminant(const IntLattice& l);

}  // namespace latmass
