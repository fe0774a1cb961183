#include "latmass/shortvec.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace latmass {

namespace {

struct Ldl {
  std::size_t n = 0;
  std::vector<Rat> d;               // positive diagonal
  std::vector<std::vector<Rat>> u;  // u[i][j], j > i
};

Ldl ldl_decompose(const IntLattice& l) {
  std::size_t n = l.rank();
  QMat q = l.gram.cast<Rat>();
  Ldl out;
  out.n = n;
  out.d.resize(n);
  out.u.assign(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw domain_error("short_vectors: lattice not positive-definite");
    out.d[i] = q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) out.u[i][j] = q(i, j) / q(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = k; j < n; ++j) {
        q(k, j) -= q(i, k) * q(i, j) / q(i, i);
        q(j, k) = q(k, j);
      }
  }
  return out;
}

// Largest integer t with t <= -c + sqrt(bound/d); bound >= 0.
Int upper_int(const Rat& c, const Rat& bound, const Rat& d) {
  Rat R = bound / d;
  Int t = floor_div(-numerator(c), denominator(c));
  auto ok = [&](const Int& x) {
    Rat v = Rat(x) + c;
    if (v <= 0) return true;
    return v * v <= R;
  };
  if (!ok(t)) {
    while (!ok(t)) --t;
    return t;
  }
  while (ok(t + 1)) ++t;
  return t;
}

// Smallest integer t with t >= -c - sqrt(bound/d).
Int lower_int(const Rat& c, const Rat& bound, const Rat& d) {
  Rat R = bound / d;
  Int t = ceil_div(-numerator(c), denominator(c));
  auto ok = [&](const Int& x) {
    Rat v = Rat(x) + c;
    if (v >= 0) return true;
    return v * v <= R;
  };
  if (!ok(t)) {
    while (!ok(t)) ++t;
    return t;
  }
  while (ok(t - 1)) --t;
  return t;
}

// Depth-first over levels top-1 .. 0; budget is what remains of max_norm.
void enumerate_level(const Ldl& ldl, const Int& max_norm, std::size_t level,
                     std::vector<Int>& x, const Rat& budget,
                     std::map<Int, std::vector<IVec>>& out) {
  Rat c = 0;
  for (std::size_t j = level + 1; j < ldl.n; ++j)
    if (x[j] != 0) c += ldl.u[level][j] * Rat(x[j]);
  Int lo = lower_int(c, budget, ldl.d[level]);
  Int hi = upper_int(c, budget, ldl.d[level]);
  for (Int v = lo; v <= hi; ++v) {
    x[level] = v;
    Rat off = Rat(v) + c;
    Rat rest = budget - ldl.d[level] * off * off;
    if (level == 0) {
      Rat used = Rat(max_norm) - rest;
      if (denominator(used) == 1) {
        Int num = numerator(used);
        if (num > 0) out[num].push_back(x);
      }
    } else {
      enumerate_level(ldl, max_norm, level - 1, x, rest, out);
    }
  }
  x[level] = 0;
}

}  // namespace

std::map<Int, std::vector<IVec>> short_vectors(const IntLattice& l, const Int& max_norm,
                                               unsigned workers) {
  std::size_t n = l.rank();
  std::map<Int, std::vector<IVec>> out;
  if (n == 0 || max_norm <= 0) return out;
  Ldl ldl = ldl_decompose(l);

  // Only the half-space x_top >= 0 is enumerated (the x_top = 0 slab still
  // produces +- pairs at lower levels); mirrored afterwards. Top-level
  // branches are independent, which is where worker parallelism attaches.
  std::size_t top = n - 1;
  Rat budget(max_norm);
  Int hi = upper_int(Rat(0), budget, ldl.d[top]);

  std::vector<Int> tops;
  for (Int v = 0; v <= hi; ++v) tops.push_back(v);

  auto run_branch = [&](const Int& v) {
    std::map<Int, std::vector<IVec>> local;
    std::vector<Int> x(n, Int(0));
    x[top] = v;
    Rat term = ldl.d[top] * Rat(v) * Rat(v);
    if (term <= budget) {
      if (top == 0) {
        if (v != 0 && denominator(term) == 1) local[numerator(term)].push_back(x);
      } else {
        enumerate_level(ldl, max_norm, top - 1, x, budget - term, local);
      }
    }
    return local;
  };

  std::vector<std::map<Int, std::vector<IVec>>> partials(tops.size());
  if (workers <= 1 || tops.size() <= 1) {
    for (std::size_t i = 0; i < tops.size(); ++i) partials[i] = run_branch(tops[i]);
  } else {
    std::atomic<std::size_t> next{0};
    unsigned nw = std::min<unsigned>(workers, tops.size());
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < nw; ++w)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= tops.size()) return;
          partials[i] = run_branch(tops[i]);
        }
      }));
    for (auto& f : futs) f.get();
  }

  // Canonicalize to one representative per +- pair (first nonzero coordinate
  // from the top positive), then emit both signs sorted lexicographically.
  for (auto& part : partials)
    for (auto& [norm, vecs] : part)
      for (auto& v : vecs) {
        int sign = 0;
        for (std::size_t i = n; i-- > 0;)
          if (v[i] != 0) {
            sign = v[i] > 0 ? 1 : -1;
            break;
          }
        if (sign > 0) out[norm].push_back(std::move(v));
      }

  std::map<Int, std::vector<IVec>> full;
  for (auto& [norm, vecs] : out) {
    auto& dst = full[norm];
    dst.reserve(vecs.size() * 2);
    for (auto& v : vecs) {
      IVec neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -v[i];
      dst.push_back(std::move(neg));
      dst.push_back(std::move(v));
    }
    std::sort(dst.begin(), dst.end());
  }
  return full;
}

std::vector<IVec> vectors_of_norm(const IntLattice& l, const Int& m, unsigned workers) {
  if (m <= 0) throw domain_error("vectors_of_norm: norm must be positive");
  auto all = short_vectors(l, m, workers);
  auto it = all.find(m);
  if (it == all.end()) return {};
  return it->second;
}

std::vector<Int> norm_counts(const IntLattice& l, const Int& max_norm, unsigned workers) {
  auto all = short_vectors(l, max_norm, workers);
  std::vector<Int> counts;
  for (Int m = 2; m <= max_norm; m += 2) {
    auto it = all.find(m);
    counts.push_back(it == all.end() ? Int(0) : Int(it->second.size()));
  }
  return counts;
}

Int min_norm(const IntLattice& l) {
  if (l.rank() == 0) throw domain_error("min_norm: empty lattice");
  Int bound = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) bound = std::max(bound, l.gram(i, i));
  auto all = short_vectors(l, bound);
  if (all.empty()) throw domain_error("min_norm: no vectors found");
  return all.begin()->first;
}

}  // namespace latmass
