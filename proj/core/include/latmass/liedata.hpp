#pragma once

#include <string>
#include <vector>

#include "latmass/lattice.hpp"

namespace latmass {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleLie {
  SimpleType type;
  unsigned rank;
};

// Throws domain_error unless (type, rank) is one of
// A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=3), E_6..E_8, F_4, G_2.
void check_simple_type(SimpleType type, unsigned rank);

// Cartan matrix A with A(i,j) = <alpha_j, alpha_i^vee> (Bourbaki numbering).
IMat cartan_matrix(SimpleType type, unsigned rank);

// Marks a_i of the highest root theta = sum a_i alpha_i.
std::vector<Int> highest_root_marks(SimpleType type, unsigned rank);

// Half-norms d_i = (alpha_i, alpha_i)/2 in the <theta,theta> = 2 normalization.
std::vector<Rat> simple_root_half_norms(SimpleType type, unsigned rank);

// Symmetrized form S(i,j) = (alpha_i, alpha_j), theta-normalized; rational for
// non-simply-laced types.
QMat symmetrized_form(SimpleType type, unsigned rank);

// Fundamental weight Lambda_j (1-based j) in simple-root coordinates.
std::vector<Rat> fundamental_weight(SimpleType type, unsigned rank, unsigned j);

// All roots in simple-root coordinates, by reflection closure of the simple
// roots. Deterministically ordered.
std::vector<std::vector<Int>> all_roots(SimpleType type, unsigned rank);

// Number of long roots (closed form).
Int long_root_count(SimpleType type, unsigned rank);

// Indices i (1-based) with mark a_i = 1, preceded by 0 for the zero weight.
std::vector<unsigned> cominimal_weights(SimpleType type, unsigned rank);

// Gram of Q_g, the lattice generated by {2a/(a,a) : a root}, theta-normalized:
// the root lattice for A/D/E, D_n for B_n, A_1^n for C_n, D_4 for F_4,
// A_2 for G_2.
IntLattice long_root_lattice(SimpleType type, unsigned rank);

// Root lattice Gram for the simply-laced types (equals the symmetrized form).
IntLattice root_lattice(SimpleType type, unsigned rank);

SimpleType simple_type_from_char(char c);

}  // namespace latmass
