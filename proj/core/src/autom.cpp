#include "latmass/autom.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <unordered_map>

#include "latmass/reduction.hpp"
#include "latmass/shortvec.hpp"

namespace latmass {

namespace {

using i64 = std::int64_t;
using Row = std::vector<i64>;

struct RowHash {
  std::size_t operator()(const Row& r) const {
    std::size_t h = 1469598103934665603ull;
    for (i64 x : r) {
      h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

i64 to_i64_checked(const Int& x) {
  if (x > Int(1) << 40 || x < -(Int(1) << 40))
    throw domain_error("autom: entries too large for the backtracking engine");
  return i64(x);
}

// One lattice prepared for backtracking: LLL-reduced Gram, all vectors of
// norm <= max diagonal, product tables and per-vector fingerprints.
struct Prepared {
  std::size_t n = 0;
  std::vector<std::vector<i64>> gram;     // reduced Gram
  IMat transform;                         // reduced basis in original coords
  std::vector<Row> vecs;                  // rows: coordinates
  std::vector<i64> norm;                  // vecs[i] . G . vecs[i]
  std::unordered_map<Row, int, RowHash> index;
  std::vector<std::size_t> fp;            // fingerprint class id per vector
  std::map<i64, std::vector<int>> by_norm;
  std::vector<std::size_t> ref;           // reference vector ids for fingerprints
  // fingerprint signature per vector: sorted (product, count) profile over ref
  std::vector<std::vector<std::pair<i64, int>>> fp_sig;
};

i64 dot_g(const Prepared& p, const Row& a, const Row& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (a[i] == 0) continue;
    i64 t = 0;
    for (std::size_t j = 0; j < p.n; ++j) t += p.gram[i][j] * b[j];
    s += a[i] * t;
  }
  return s;
}

Prepared prepare(const IntLattice& l, unsigned workers) {
  if (!l.is_positive_definite())
    throw domain_error("autom: positive-definite lattice required");
  ReducedLattice red = lll_reduce(l);
  Prepared p;
  p.n = l.rank();
  p.transform = red.transform;
  p.gram.assign(p.n, std::vector<i64>(p.n));
  Int maxdiag = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) p.gram[i][j] = to_i64_checked(red.lattice.gram(i, j));
    maxdiag = std::max(maxdiag, red.lattice.gram(i, i));
  }
  auto classes = short_vectors(red.lattice, maxdiag, workers);
  for (auto& [norm, vs] : classes) {
    for (auto& v : vs) {
      Row r(p.n);
      for (std::size_t i = 0; i < p.n; ++i) r[i] = to_i64_checked(v[i]);
      int id = int(p.vecs.size());
      p.index.emplace(r, id);
      p.vecs.push_back(std::move(r));
      p.norm.push_back(to_i64_checked(norm));
      p.by_norm[p.norm.back()].push_back(id);
    }
  }

  // Reference set: smallest norm classes until at least 200 vectors (or all).
  for (auto& [norm, ids] : p.by_norm) {
    for (int id : ids) p.ref.push_back(std::size_t(id));
    if (p.ref.size() >= 200) break;
  }

  // Per-vector profile of inner products against the reference set.
  p.fp_sig.resize(p.vecs.size());
  auto compute_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      std::map<i64, int> profile;
      for (std::size_t r : p.ref) ++profile[dot_g(p, p.vecs[v], p.vecs[r])];
      p.fp_sig[v].assign(profile.begin(), profile.end());
    }
  };
  if (workers <= 1 || p.vecs.size() < 256) {
    compute_range(0, p.vecs.size());
  } else {
    std::vector<std::future<void>> futs;
    std::size_t chunk = (p.vecs.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk, hi = std::min(p.vecs.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, compute_range, lo, hi));
    }
    for (auto& f : futs) f.get();
  }

  // Intern signatures into class ids.
  std::map<std::pair<i64, std::vector<std::pair<i64, int>>>, std::size_t> interned;
  p.fp.resize(p.vecs.size());
  for (std::size_t v = 0; v < p.vecs.size(); ++v) {
    auto key = std::make_pair(p.norm[v], p.fp_sig[v]);
    auto [it, fresh] = interned.emplace(key, interned.size());
    p.fp[v] = it->second;
  }
  return p;
}

// Backtracking over images of the domain basis inside the codomain vector
// set. Domain and codomain coincide for automorphisms.
struct Search {
  const Prepared* dom = nullptr;  // provides Gram constraints of the basis
  const Prepared* cod = nullptr;  // provides candidate vectors
  std::vector<int> order;         // processing order of domain basis levels
  std::vector<std::vector<int>> candidates;  // per processing position

  // Gram entry of the domain in original (unpermuted) level indices.
  i64 g(int i, int j) const { return dom->gram[i][j]; }
};

// Candidate list for basis level `lvl` of the domain: correct norm and
// fingerprint class (classes are comparable across lattices because the
// reference sets are norm-class unions).
std::vector<int> base_candidates(const Prepared& dom, const Prepared& cod, int lvl,
                                 const std::vector<std::pair<i64, std::vector<std::pair<i64, int>>>>& dom_base_sigs) {
  std::vector<int> out;
  const auto& want = dom_base_sigs[std::size_t(lvl)];
  auto it = cod.by_norm.find(want.first);
  if (it == cod.by_norm.end()) return out;
  for (int id : it->second) {
    if (cod.fp_sig[std::size_t(id)] == want.second) out.push_back(id);
  }
  return out;
}

// Depth-first extension: images for positions pos..end, respecting inner
// products with all previously chosen images. Returns true when a full
// assignment is found (written into `image`).
bool extend(const Search& s, std::size_t pos, std::vector<int>& image) {
  if (pos == s.order.size()) return true;
  int lvl = s.order[pos];
  for (int cand : s.candidates[pos]) {
    const Row& cv = s.cod->vecs[std::size_t(cand)];
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      int plvl = s.order[q];
      ok = dot_g(*s.cod, cv, s.cod->vecs[std::size_t(image[std::size_t(q)])]) ==
           s.g(lvl, plvl);
    }
    if (!ok) continue;
    image[pos] = cand;
    if (extend(s, pos + 1, image)) return true;
  }
  image[pos] = -1;
  return false;
}

// As extend, but with the image at position `pos` prescribed.
bool extend_with(const Search& s, std::size_t pos, int forced, std::vector<int>& image) {
  const Row& cv = s.cod->vecs[std::size_t(forced)];
  int lvl = s.order[pos];
  if (s.cod->norm[std::size_t(forced)] != s.g(lvl, lvl)) return false;
  for (std::size_t q = 0; q < pos; ++q) {
    int plvl = s.order[q];
    if (dot_g(*s.cod, cv, s.cod->vecs[std::size_t(image[std::size_t(q)])]) != s.g(lvl, plvl))
      return false;
  }
  image[pos] = forced;
  return extend(s, pos + 1, image);
}

// Greedy level ordering: repeatedly pick the level with the fewest
// candidates consistent with the already-ordered levels mapped identically.
std::vector<int> greedy_order(const Prepared& p,
                              const std::vector<std::vector<int>>& base_cands,
                              const std::vector<int>& basis_ids) {
  std::size_t n = p.n;
  std::vector<int> order;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    long best_count = -1;
    int best = -1;
    for (std::size_t lvl = 0; lvl < n; ++lvl) {
      if (used[lvl]) continue;
      long count = 0;
      for (int cand : base_cands[lvl]) {
        const Row& cv = p.vecs[std::size_t(cand)];
        bool ok = true;
        for (int plvl : order) {
          if (dot_g(p, cv, p.vecs[std::size_t(basis_ids[std::size_t(plvl)])]) !=
              p.gram[lvl][std::size_t(plvl)]) {
            ok = false;
            break;
          }
        }
        if (ok) ++count;
      }
      if (best < 0 || count < best_count) {
        best_count = count;
        best = int(lvl);
      }
    }
    used[std::size_t(best)] = true;
    order.push_back(best);
  }
  return order;
}

IMat image_to_matrix(const Prepared& p, const std::vector<int>& order,
                     const std::vector<int>& image) {
  std::size_t n = p.n;
  IMat t(n, n);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int lvl = order[pos];
    const Row& row = p.vecs[std::size_t(image[pos])];
    for (std::size_t j = 0; j < n; ++j) t(std::size_t(lvl), j) = row[j];
  }
  return t;
}

IMat integer_inverse(const IMat& m) {
  QMat inv = inverse(m.cast<Rat>());
  IMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(inv(i, j)) != 1)
        throw domain_error("autom: non-unimodular transform (internal error)");
      out(i, j) = numerator(inv(i, j));
    }
  return out;
}

}  // namespace

AutResult aut_order(const IntLattice& l, unsigned workers) {
  if (l.rank() == 0) return {Int(1), {}};
  Prepared p = prepare(l, workers);
  std::size_t n = p.n;

  // Basis vectors as elements of the vector set.
  std::vector<int> basis_ids(n);
  for (std::size_t k = 0; k < n; ++k) {
    Row e(n, 0);
    e[k] = 1;
    auto it = p.index.find(e);
    if (it == p.index.end()) throw domain_error("autom: basis vector missing from vector set");
    basis_ids[k] = it->second;
  }

  // Candidate lists keyed by level, then greedy ordering for pruning power.
  std::vector<std::pair<i64, std::vector<std::pair<i64, int>>>> base_sigs(n);
  for (std::size_t k = 0; k < n; ++k)
    base_sigs[k] = {p.norm[std::size_t(basis_ids[k])], p.fp_sig[std::size_t(basis_ids[k])]};
  std::vector<std::vector<int>> base_cands(n);
  for (std::size_t k = 0; k < n; ++k)
    base_cands[k] = base_candidates(p, p, int(k), base_sigs);
  std::vector<int> order = greedy_order(p, base_cands, basis_ids);

  Search search;
  search.dom = &p;
  search.cod = &p;
  search.order = order;
  search.candidates.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) search.candidates[pos] = base_cands[std::size_t(order[pos])];

  // Orbit-stabilizer accounting, deepest position first: generators found at
  // position pos fix the basis levels order[0..pos-1].
  std::vector<IMat> generators;           // in reduced coordinates
  std::vector<std::size_t> gen_position;  // discovery position of each generator

  auto apply_gen = [&](const IMat& t, int vec_id) -> int {
    const Row& v = p.vecs[std::size_t(vec_id)];
    Row out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += v[i] * to_i64_checked(t(i, j));
    }
    auto it = p.index.find(out);
    if (it == p.index.end()) throw domain_error("autom: generator image left vector set");
    return it->second;
  };

  Int total_order = 1;
  for (std::size_t pos = n; pos-- > 0;) {
    int lvl = search.order[pos];
    int base_vec = basis_ids[std::size_t(lvl)];

    // Usable generators fix levels order[0..pos-1]; those are exactly the
    // generators discovered at positions >= pos.
    std::vector<std::size_t> usable;
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (gen_position[g] >= pos) usable.push_back(g);

    auto orbit_of = [&](int seed) {
      std::vector<int> orbit{seed};
      std::unordered_map<int, bool> seen{{seed, true}};
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (std::size_t g : usable) {
          int img = apply_gen(generators[g], orbit[head]);
          if (!seen.count(img)) {
            seen.emplace(img, true);
            orbit.push_back(img);
          }
        }
      return orbit;
    };

    std::vector<int> orbit = orbit_of(base_vec);
    std::unordered_map<int, bool> in_orbit;
    for (int v : orbit) in_orbit.emplace(v, true);
    std::unordered_map<int, bool> dead;

    std::vector<int> image(n, -1);
    for (std::size_t q = 0; q < pos; ++q)
      image[q] = basis_ids[std::size_t(search.order[q])];

    for (int cand : search.candidates[pos]) {
      if (in_orbit.count(cand) || dead.count(cand)) continue;
      std::vector<int> img = image;
      if (extend_with(search, pos, cand, img)) {
        generators.push_back(image_to_matrix(p, search.order, img));
        gen_position.push_back(pos);
        usable.push_back(generators.size() - 1);
        // Orbit grows; recompute from the seed with the new generator.
        orbit = orbit_of(base_vec);
        in_orbit.clear();
        for (int v : orbit) in_orbit.emplace(v, true);
      } else {
        for (int d : orbit_of(cand)) dead.emplace(d, true);
      }
    }
    total_order *= Int(orbit.size());
  }

  // Map generators back to the original basis (t_orig = U^{-1} t U) and
  // transpose into the g^T gram g = gram convention.
  AutResult res;
  res.order = total_order;
  IMat uinv = integer_inverse(p.transform);
  for (const auto& t : generators)
    res.generators.push_back((uinv * t * p.transform).transposed());
  return res;
}

IsometryWitness is_isometric(const IntLattice& a, const IntLattice& b, unsigned workers) {
  if (a.rank() != b.rank()) return {};
  if (a.rank() == 0) return {IMat(0, 0)};
  if (a.determinant() != b.determinant()) return {};

  // Search images of b's basis among a's vectors.
  Prepared pa = prepare(a, workers);
  Prepared pb = prepare(b, workers);

  // Norm-class profile pre-screen.
  {
    auto ita = pa.by_norm.begin();
    auto itb = pb.by_norm.begin();
    for (; ita != pa.by_norm.end() && itb != pb.by_norm.end(); ++ita, ++itb)
      if (ita->first != itb->first || ita->second.size() != itb->second.size()) return {};
    if ((ita == pa.by_norm.end()) != (itb == pb.by_norm.end())) return {};
  }

  std::size_t n = pa.n;
  std::vector<int> basis_ids(n);
  for (std::size_t k = 0; k < n; ++k) {
    Row e(n, 0);
    e[k] = 1;
    auto it = pb.index.find(e);
    if (it == pb.index.end()) throw domain_error("autom: basis vector missing");
    basis_ids[k] = it->second;
  }
  std::vector<std::pair<i64, std::vector<std::pair<i64, int>>>> base_sigs(n);
  for (std::size_t k = 0; k < n; ++k)
    base_sigs[k] = {pb.norm[std::size_t(basis_ids[k])], pb.fp_sig[std::size_t(basis_ids[k])]};

  std::vector<std::vector<int>> cands(n);
  for (std::size_t k = 0; k < n; ++k) {
    cands[k] = base_candidates(pb, pa, int(k), base_sigs);
    if (cands[k].empty()) return {};
  }
  // Order by B's self-consistency counts for pruning.
  std::vector<std::vector<int>> self_cands(n);
  for (std::size_t k = 0; k < n; ++k) self_cands[k] = base_candidates(pb, pb, int(k), base_sigs);
  std::vector<int> order = greedy_order(pb, self_cands, basis_ids);

  Search search;
  search.dom = &pb;
  search.cod = &pa;
  search.order = order;
  search.candidates.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) search.candidates[pos] = cands[std::size_t(order[pos])];

  std::vector<int> image(n, -1);
  if (!extend(search, 0, image)) return {};
  IMat t = image_to_matrix(pa, order, image);
  // t gram_a' t^T = gram_b'; map through both reductions and transpose so
  // that W^T gram_a W = gram_b.
  IMat s = integer_inverse(pb.transform) * t * pa.transform;
  IsometryWitness w;
  w.matrix = s.transposed();
  return w;
}

}  // namespace latmass
