#pragma once

#include <optional>

#include "latmass/autom.hpp"
#include "latmass/mass.hpp"

namespace latmass {

// All p-neighbors of an even positive-definite lattice, one per projective
// isotropic line mod p. Requires p coprime to det(L). Small inputs only; the
// genus enumerator consumes lines lazily instead.
std::vector<IntLattice> kneser_neighbors(const IntLattice& l, const Int& p);

struct GenusClass {
  IntLattice representative;
  Int aut_order;
};

struct GenusEnumeration {
  std::vector<GenusClass> classes;
  MassValue accumulated_mass;
  MassValue target_mass;
  bool complete = false;
  Int neighbors_evaluated = 0;
};

struct EnumerateOptions {
  unsigned workers = 1;
  Int budget = 1000000;        // neighbor evaluations
  std::optional<Int> prime;    // neighbor prime override
  bool exhaustive_closure = false;  // close under all neighbors; no mass target
};

// Breadth-first closure under p-neighbors with isometry dedup, stopping at
// exact mass closure (or at full neighbor closure in exhaustive mode).
GenusEnumeration enumerate_genus(const IntLattice& l, const EnumerateOptions& opts = {});

}  // namespace latmass
