#pragma once

#include <string>

#include "latmass/neighbor.hpp"
#include "latmass/voa.hpp"

namespace latmass {

// Lattice file format: {"label": string, "gram": [[int,...],...]}; exact
// integers only.
std::string lattice_to_json(const IntLattice& l);
IntLattice lattice_from_json(const std::string& text);
IntLattice lattice_from_json_file(const std::string& path);

struct VoaSpecFile {
  AffineVoaSpec spec;
  Int index = 1;
};

// {"components":[{"type":"B","rank":12,"level":2},...],
//  "cosets":[[0,1],...], "index": 1}
VoaSpecFile voa_spec_from_json(const std::string& text);
VoaSpecFile voa_spec_from_json_file(const std::string& path);

std::string enumeration_to_json(const GenusEnumeration& e);

std::string matrix_to_json(const IMat& m);

}  // namespace latmass
