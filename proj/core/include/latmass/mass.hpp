#pragma once

#include "latmass/genus.hpp"
#include "latmass/numeric.hpp"

namespace latmass {

struct MassValue {
  Rat value;  // > 0, lowest terms (cpp_rational normalizes)

  std::string str() const {
    return numerator(value).str() + "/" + denominator(value).str();
  }
};

// Exact Smith-Minkowski-Siegel mass of a positive-definite genus, from its
// symbol: standard mass (zeta and L values reduced to Bernoulli numbers)
// times local corrections per prime. Supported for rank 1 and rank >= 3;
// rank 2 is served by genus enumeration instead (see README).
MassValue sms_mass(const GenusSymbol& s);

namespace detail {
// p-local mass factor and the standard factor it replaces; exposed for the
// cross-validation tests. `chi_p` is the character value at p attached to
// the standard mass (0 when p divides the discriminant).
Rat local_mass_ratio(const LocalSymbol& sym, unsigned n, int chi_p);
}  // namespace detail

}  // namespace latmass
