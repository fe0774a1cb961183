#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latmass/lattice.hpp"

namespace latmass {

using IVec = std::vector<Int>;

// All nonzero vectors v with v^T gram v <= max_norm, for positive-definite L.
// Both v and -v are listed. Exact rational Cholesky bound propagation; no
// floating point anywhere. Keys of the result are the occurring norms.
std::map<Int, std::vector<IVec>> short_vectors(const IntLattice& l, const Int& max_norm,
                                               unsigned workers = 1);

// All v with v^T gram v = m, lexicographically sorted coordinate vectors.
std::vector<IVec> vectors_of_norm(const IntLattice& l, const Int& m, unsigned workers = 1);

// Number of vectors of each norm in {2, 4, ..., up to max_norm}; cheap
// isometry invariant used by the genus enumerator.
std::vector<Int> norm_counts(const IntLattice& l, const Int& max_norm, unsigned workers = 1);

Int min_norm(const IntLattice& l);

}  // namespace latmass
