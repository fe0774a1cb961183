#pragma once

#include <string>

#include "latmass/voa.hpp"

namespace latmass {

struct HolTableEntry {
  std::string lie_symbol;  // e.g. "E_{8,2}B_{8,1}" or "(A_{3,2})^4(A_{1,1})^4"
  unsigned rank = 0;
  AffineVoaSpec spec;      // parsed components, no cosets
};

// Parse a product of affine symbols X_{n,k}, with (...)^m repetition.
AffineVoaSpec parse_lie_symbol(const std::string& text);

// Bundled table of the semisimple c=24 Lie algebra entries.
std::vector<HolTableEntry> load_hol_table();
std::vector<HolTableEntry> load_hol_table_file(const std::string& path);

IntLattice floor_of_entry(const HolTableEntry& e);

}  // namespace latmass
