#pragma once

#include <optional>

#include "latmass/lattice.hpp"

namespace latmass {

struct AutResult {
  Int order = 1;
  std::vector<IMat> generators;  // each g satisfies g^T gram g = gram
};

struct IsometryWitness {
  std::optional<IMat> matrix;  // W with W^T gram_a W = gram_b when present
  bool found() const { return matrix.has_value(); }
};

// Exact order of the automorphism group of a positive-definite lattice, by
// backtracking over short-vector images with orbit-stabilizer accounting.
AutResult aut_order(const IntLattice& l, unsigned workers = 1);

// Isometry test between positive-definite lattices; fast invariant
// pre-screens (rank, determinant, norm-class sizes) short-circuit negatives.
IsometryWitness is_isometric(const IntLattice& a, const IntLattice& b, unsigned workers = 1);

}  // namespace latmass
