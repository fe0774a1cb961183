#include "latmass/voa.hpp"

#include <algorithm>

#include "latmass/genus.hpp"
#include "latmass/shortvec.hpp"

namespace latmass {

namespace {

std::vector<unsigned> component_offsets(const AffineVoaSpec& spec) {
  std::vector<unsigned> off{0};
  for (const auto& c : spec.components) off.push_back(off.back() + c.rank);
  return off;
}

void check_spec(const AffineVoaSpec& spec) {
  for (const auto& c : spec.components) {
    check_simple_type(c.type, c.rank);
    if (c.level == 0) throw domain_error("voa spec: level must be positive");
  }
  for (const auto& coset : spec.cosets) {
    if (coset.size() != spec.components.size())
      throw domain_error("voa spec: coset entry count mismatch");
    Rat half_norm = 0;
    for (std::size_t i = 0; i < coset.size(); ++i) {
      const auto& c = spec.components[i];
      if (coset[i] == 0) continue;
      auto allowed = cominimal_weights(c.type, c.rank);
      if (std::find(allowed.begin(), allowed.end(), coset[i]) == allowed.end())
        throw domain_error("voa spec: coset weight " + std::to_string(coset[i]) +
                           " is not cominimal for component " + std::to_string(i));
      auto w = fundamental_weight(c.type, c.rank, coset[i]);
      QMat s = symmetrized_form(c.type, c.rank);
      Rat norm = 0;
      for (unsigned a = 0; a < c.rank; ++a)
        for (unsigned b = 0; b < c.rank; ++b) norm += w[a] * s(a, b) * w[b];
      half_norm += Rat(c.level) * norm / 2;
    }
    if (denominator(half_norm) != 1)
      throw domain_error("voa spec: coset is not isotropic");
  }
}

}  // namespace

QMat voa_ambient_form(const AffineVoaSpec& spec) {
  auto off = component_offsets(spec);
  unsigned total = off.back();
  QMat form(total, total);
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& c = spec.components[i];
    QMat s = symmetrized_form(c.type, c.rank);
    for (unsigned a = 0; a < c.rank; ++a)
      for (unsigned b = 0; b < c.rank; ++b)
        form(off[i] + a, off[i] + b) = Rat(c.level) * s(a, b);
  }
  return form;
}

IntLattice affine_floor(const AffineVoaSpec& spec) {
  check_spec(spec);
  IntLattice sum(IMat(0, 0));
  std::string label;
  for (const auto& c : spec.components) {
    IntLattice q = rescale(long_root_lattice(c.type, c.rank), Int(c.level));
    q.label = "";
    sum = direct_sum(sum, q);
  }
  return sum;
}

IntLattice maximal_lattice(const AffineVoaSpec& spec) {
  check_spec(spec);
  RationalSpan span;
  span.ambient_gram = voa_ambient_form(spec);
  auto off = component_offsets(spec);
  unsigned total = off.back();

  // Floor generators: 2a/(a,a) per root, per component, in root coordinates.
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& c = spec.components[i];
    QMat s = symmetrized_form(c.type, c.rank);
    for (const auto& r : all_roots(c.type, c.rank)) {
      Rat norm = 0;
      for (unsigned a = 0; a < c.rank; ++a)
        for (unsigned b = 0; b < c.rank; ++b) norm += Rat(r[a]) * s(a, b) * Rat(r[b]);
      std::vector<Rat> g(total, Rat(0));
      for (unsigned a = 0; a < c.rank; ++a) g[off[i] + a] = Rat(2) * Rat(r[a]) / norm;
      span.generators.push_back(std::move(g));
    }
  }
  // Coset generators: concatenated fundamental weights.
  for (const auto& coset : spec.cosets) {
    std::vector<Rat> g(total, Rat(0));
    for (std::size_t i = 0; i < coset.size(); ++i) {
      if (coset[i] == 0) continue;
      const auto& c = spec.components[i];
      auto w = fundamental_weight(c.type, c.rank, coset[i]);
      for (unsigned a = 0; a < c.rank; ++a) g[off[i] + a] = w[a];
    }
    span.generators.push_back(std::move(g));
  }

  IntLattice out = lattice_from_generators(span);
  if (!out.is_even())
    throw domain_error("maximal_lattice: resulting lattice is odd (invalid coset)");
  return out;
}

MassValue vh_mass(const IntLattice& l_v, const Int& index) {
  if (index <= 0) throw domain_error("vh_mass: index must be positive");
  if (!l_v.is_positive_definite())
    throw domain_error("vh_mass: positive-definite maximal lattice required");
  MassValue m = sms_mass(genus_symbol(l_v));
  m.value *= Rat(index);
  return m;
}

bool mass_fix_check(const GenusEnumeration& enumeration, const Int& index) {
  if (index != 1)
    throw domain_error("mass_fix_check: only the index-1 case is computable here");
  if (!enumeration.complete) return false;
  // [Aut L~ : G] = 1 and G_W = Aut L_W: per class the identity reduces to
  // 1/|Aut L_0| on both sides; globally the accumulated mass must match the
  // genus mass exactly.
  Rat acc = 0;
  for (const auto& cls : enumeration.classes) acc += Rat(1) / Rat(cls.aut_order);
  return acc == enumeration.target_mass.value &&
         acc == enumeration.accumulated_mass.value;
}

bool norm2_longroot_check(const AffineVoaSpec& spec, unsigned workers) {
  IntLattice ml = maximal_lattice(spec);
  Int expected = 0;
  for (const auto& c : spec.components)
    if (c.level == 1) expected += long_root_count(c.type, c.rank);
  Int found = ml.rank() == 0 ? Int(0) : Int(vectors_of_norm(ml, 2, workers).size());
  return found == expected;
}

}  // namespace latmass
