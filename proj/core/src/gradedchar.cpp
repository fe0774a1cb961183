#include "latmass/gradedchar.hpp"

namespace latmass {

std::vector<Int> colored_partitions(unsigned r, unsigned n_max) {
  // Convolution power of the single-color generating function.
  std::vector<Int> p(n_max + 1, Int(0));
  p[0] = 1;
  for (unsigned color = 0; color < r; ++color) {
    // multiply by prod_i (1-q^i)^{-1}: partial sums per part size
    for (unsigned part = 1; part <= n_max; ++part)
      for (unsigned n = part; n <= n_max; ++n) p[n] += p[n - part];
  }
  return p;
}

GradedDims lattice_voa_dims(const IntLattice& l, unsigned n_max, unsigned workers) {
  if (!l.is_even()) throw domain_error("lattice_voa_dims: even lattice required");
  if (l.rank() > 0 && !l.is_positive_definite())
    throw domain_error("lattice_voa_dims: positive-definite lattice required");
  GradedDims out;
  out.rank = unsigned(l.rank());
  auto pr = colored_partitions(out.rank, n_max);

  out.by_degree.assign(n_max + 1, Int(0));
  // alpha = 0 contributes p_r(n) at every degree.
  for (unsigned n = 0; n <= n_max; ++n) out.by_degree[n] = pr[n];
  {
    IVec zero(l.rank(), Int(0));
    std::vector<Int> dims(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) dims[n] = pr[n];
    out.per_alpha.emplace(std::move(zero), std::move(dims));
  }

  if (l.rank() == 0) return out;
  auto classes = short_vectors(l, Int(2) * n_max, workers);
  for (const auto& [norm, vecs] : classes) {
    Int half = norm / 2;
    for (const auto& v : vecs) {
      std::vector<Int> dims(n_max + 1, Int(0));
      for (unsigned n = 0; n <= n_max; ++n) {
        Int shift = Int(n) - half;
        if (shift >= 0) {
          dims[n] = pr[unsigned(shift)];
          out.by_degree[n] += dims[n];
        }
      }
      out.per_alpha.emplace(v, std::move(dims));
    }
  }
  return out;
}

bool cartan_max_check(const IntLattice& l, unsigned n_max, unsigned workers) {
  GradedDims dims = lattice_voa_dims(l, n_max, workers);
  auto classes = short_vectors(l, Int(2) * n_max, workers);
  std::size_t expected = 1;  // alpha = 0
  for (const auto& [norm, vecs] : classes) expected += vecs.size();
  // Every alpha with (alpha,alpha) <= 2 n_max must appear with boundary
  // dimension exactly 1 and nothing below it.
  if (dims.per_alpha.size() != expected) return false;
  for (const auto& [alpha, by_deg] : dims.per_alpha) {
    Int norm = bilinear(l.gram, alpha, alpha);
    Int boundary = norm / 2;
    if (boundary > Int(n_max)) return false;
    for (unsigned n = 0; n <= n_max; ++n) {
      if (Int(n) < boundary && by_deg[n] != 0) return false;
      if (Int(n) == boundary && by_deg[n] != 1) return false;
    }
  }
  return true;
}

}  // namespace latmass
