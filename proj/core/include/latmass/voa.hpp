#pragma once

#include "latmass/liedata.hpp"
#include "latmass/mass.hpp"
#include "latmass/neighbor.hpp"

namespace latmass {

// Extension data of an affine VOA: simple components with levels, plus
// optional isotropic simple-current cosets. Each coset entry selects a
// cominimal fundamental weight index per component (0 for the zero weight).
struct AffineVoaSpec {
  struct Component {
    SimpleType type;
    unsigned rank;
    unsigned level;
  };
  std::vector<Component> components;
  std::vector<std::vector<unsigned>> cosets;
};

// Ambient quadratic space of a spec: root coordinates per component with the
// level-scaled form sum_i k_i <,>_i.
QMat voa_ambient_form(const AffineVoaSpec& spec);

// Direct sum of the level-rescaled long-root lattices.
IntLattice affine_floor(const AffineVoaSpec& spec);

// Floor plus the coset generators, as a lattice in the ambient space; errors
// when the result is non-integral or odd (invalid coset data).
IntLattice maximal_lattice(const AffineVoaSpec& spec);

// mass(V, H) = mass(L_V) * [Aut L~ : G], with the group index supplied.
MassValue vh_mass(const IntLattice& l_v, const Int& index);

// Index-1 consistency of the VH mass identity across a complete enumeration:
// the per-class Aut orders must tie out against the genus mass exactly.
bool mass_fix_check(const GenusEnumeration& enumeration, const Int& index);

// Norm-2 vectors of the maximal lattice against the long-root count of the
// level-1 components.
bool norm2_longroot_check(const AffineVoaSpec& spec, unsigned workers = 1);

}  // namespace latmass
