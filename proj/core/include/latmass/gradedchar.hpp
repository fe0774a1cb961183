#pragma once

#include <map>

#include "latmass/shortvec.hpp"

namespace latmass {

// Coefficients of prod_{i>=1} (1 - q^i)^{-r} up to degree n_max.
std::vector<Int> colored_partitions(unsigned r, unsigned n_max);

struct GradedDims {
  unsigned rank = 0;                         // Heisenberg rank
  std::vector<Int> by_degree;                // index = degree, 0..n_max
  std::map<IVec, std::vector<Int>> per_alpha;  // dims per degree for each vector
};

// Graded dimensions of the lattice vertex algebra of an even positive-definite
// lattice: dim V_n = sum_alpha p_r(n - (alpha,alpha)/2).
GradedDims lattice_voa_dims(const IntLattice& l, unsigned n_max, unsigned workers = 1);

// Checks that {alpha : dim V^alpha at degree (alpha,alpha)/2 >= 1} matches the
// norm-bounded vector set and that every boundary dimension is exactly 1.
bool cartan_max_check(const IntLattice& l, unsigned n_max, unsigned workers = 1);

}  // namespace latmass
