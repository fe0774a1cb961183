#include "latmass/liedata.hpp"

#include <algorithm>
#include <set>

namespace latmass {

void check_simple_type(SimpleType type, unsigned rank) {
  switch (type) {
    case SimpleType::A:
      if (rank >= 1) return;
      break;
    case SimpleType::B:
      if (rank >= 2) return;
      break;
    case SimpleType::C:
      if (rank >= 2) return;
      break;
    case SimpleType::D:
      if (rank >= 3) return;
      break;
    case SimpleType::E:
      if (rank >= 6 && rank <= 8) return;
      break;
    case SimpleType::F:
      if (rank == 4) return;
      break;
    case SimpleType::G:
      if (rank == 2) return;
      break;
  }
  throw domain_error(std::string("invalid simple type ") + char(type) + "_" +
                     std::to_string(rank));
}

SimpleType simple_type_from_char(char c) {
  switch (c) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
  }
  throw domain_error(std::string("unknown simple type letter '") + c + "'");
}

namespace {

// Bonds of the Dynkin diagram as (i, j, a_ij, a_ji) with 0-based nodes.
struct Bond {
  unsigned i, j;
  int aij, aji;
};

std::vector<Bond> bonds(SimpleType type, unsigned n) {
  std::vector<Bond> b;
  auto chain = [&](unsigned upto) {
    for (unsigned k = 0; k + 1 < upto; ++k) b.push_back({k, k + 1, -1, -1});
  };
  switch (type) {
    case SimpleType::A:
      chain(n);
      break;
    case SimpleType::B:
      // alpha_n short: a(n-1,n) = -1, a(n,n-1) = -2
      chain(n - 1);
      b.push_back({n - 2, n - 1, -1, -2});
      break;
    case SimpleType::C:
      // alpha_n long: a(n-1,n) = -2, a(n,n-1) = -1
      chain(n - 1);
      b.push_back({n - 2, n - 1, -2, -1});
      break;
    case SimpleType::D:
      chain(n - 1);
      b.push_back({n - 3, n - 1, -1, -1});
      break;
    case SimpleType::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      b.push_back({0, 2, -1, -1});
      b.push_back({2, 3, -1, -1});
      b.push_back({1, 3, -1, -1});
      for (unsigned k = 3; k + 1 < n; ++k) b.push_back({k, k + 1, -1, -1});
      break;
    case SimpleType::F:
      // 1-2=>3-4 with alpha_3, alpha_4 short: (alpha_2, alpha_3) = -1.
      b.push_back({0, 1, -1, -1});
      b.push_back({1, 2, -1, -2});
      b.push_back({2, 3, -1, -1});
      break;
    case SimpleType::G:
      // alpha_1 long, alpha_2 short: (alpha_1, alpha_2) = -1.
      b.push_back({0, 1, -1, -3});
      break;
  }
  return b;
}

}  // namespace

IMat cartan_matrix(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  IMat a(rank, rank);
  for (unsigned i = 0; i < rank; ++i) a(i, i) = 2;
  for (const auto& bond : bonds(type, rank)) {
    // a(i, j) = <alpha_j, alpha_i^vee>
    a(bond.i, bond.j) = bond.aij;
    a(bond.j, bond.i) = bond.aji;
  }
  return a;
}

std::vector<Rat> simple_root_half_norms(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  std::vector<Rat> d(rank, Rat(1));
  switch (type) {
    case SimpleType::B:
      d[rank - 1] = Rat(1, 2);
      break;
    case SimpleType::C:
      for (unsigned i = 0; i + 1 < rank; ++i) d[i] = Rat(1, 2);
      break;
    case SimpleType::F:
      d[2] = Rat(1, 2);
      d[3] = Rat(1, 2);
      break;
    case SimpleType::G:
      d[1] = Rat(1, 3);
      break;
    default:
      break;
  }
  return d;
}

QMat symmetrized_form(SimpleType type, unsigned rank) {
  IMat a = cartan_matrix(type, rank);
  auto d = simple_root_half_norms(type, rank);
  QMat s(rank, rank);
  // (alpha_i, alpha_j) = a(i,j) * d_i
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j) s(i, j) = Rat(a(i, j)) * d[i];
  if (!s.is_symmetric()) throw domain_error("symmetrized_form: internal inconsistency");
  return s;
}

std::vector<Int> highest_root_marks(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  // theta is the unique long root maximal in the root order; obtain it from
  // the reflection closure instead of hardcoding per-type tables.
  auto roots = all_roots(type, rank);
  QMat s = symmetrized_form(type, rank);
  std::vector<Int> best;
  Int best_height = -1;
  for (const auto& r : roots) {
    Rat norm = 0;
    for (unsigned i = 0; i < rank; ++i)
      for (unsigned j = 0; j < rank; ++j) norm += Rat(r[i]) * s(i, j) * Rat(r[j]);
    if (norm != 2) continue;  // long roots only
    Int height = 0;
    for (const auto& c : r) height += c;
    if (height > best_height) {
      best_height = height;
      best = r;
    }
  }
  return best;
}

std::vector<Rat> fundamental_weight(SimpleType type, unsigned rank, unsigned j) {
  check_simple_type(type, rank);
  if (j < 1 || j > rank) throw domain_error("fundamental_weight: index out of range");
  QMat s = symmetrized_form(type, rank);
  QMat sinv = inverse(s);
  auto d = simple_root_half_norms(type, rank);
  std::vector<Rat> w(rank);
  for (unsigned k = 0; k < rank; ++k) w[k] = d[j - 1] * sinv(k, j - 1);
  return w;
}

std::vector<std::vector<Int>> all_roots(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  QMat s = symmetrized_form(type, rank);
  auto d = simple_root_half_norms(type, rank);
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  for (unsigned i = 0; i < rank; ++i) {
    std::vector<Int> e(rank, Int(0));
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  // Reflection closure: s_i(b) = b - <b, alpha_i^vee> alpha_i.
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto b = queue[q];
    for (unsigned i = 0; i < rank; ++i) {
      Rat pairing = 0;
      for (unsigned k = 0; k < rank; ++k) pairing += Rat(b[k]) * s(k, i);
      Rat coeff = pairing / d[i];
      if (denominator(coeff) != 1)
        throw domain_error("all_roots: non-integral reflection coefficient");
      auto nb = b;
      nb[i] -= numerator(coeff);
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  std::vector<std::vector<Int>> out(seen.begin(), seen.end());
  return out;
}

Int long_root_count(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  Int n = rank;
  switch (type) {
    case SimpleType::A: return n * (n + 1);
    case SimpleType::B: return 2 * n * (n - 1);
    case SimpleType::C: return 2 * n;
    case SimpleType::D: return 2 * n * (n - 1);
    case SimpleType::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case SimpleType::F: return 24;
    case SimpleType::G: return 6;
  }
  throw domain_error("long_root_count: unreachable");
}

std::vector<unsigned> cominimal_weights(SimpleType type, unsigned rank) {
  auto marks = highest_root_marks(type, rank);
  std::vector<unsigned> out{0};
  for (unsigned i = 0; i < rank; ++i)
    if (marks[i] == 1) out.push_back(i + 1);
  return out;
}

IntLattice long_root_lattice(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  RationalSpan span;
  span.ambient_gram = symmetrized_form(type, rank);
  QMat s = span.ambient_gram;
  for (const auto& r : all_roots(type, rank)) {
    Rat norm = 0;
    for (unsigned i = 0; i < rank; ++i)
      for (unsigned j = 0; j < rank; ++j) norm += Rat(r[i]) * s(i, j) * Rat(r[j]);
    // 2a/(a,a)
    std::vector<Rat> g(rank);
    for (unsigned i = 0; i < rank; ++i) g[i] = Rat(2) * Rat(r[i]) / norm;
    span.generators.push_back(std::move(g));
  }
  IntLattice q = lattice_from_generators(span);
  q.label = std::string("Q_") + char(type) + std::to_string(rank);
  return q;
}

IntLattice root_lattice(SimpleType type, unsigned rank) {
  check_simple_type(type, rank);
  bool simply_laced = type == SimpleType::A || type == SimpleType::D || type == SimpleType::E;
  if (!simply_laced)
    throw domain_error("root_lattice: only simply-laced root lattices are integral here");
  QMat s = symmetrized_form(type, rank);
  IMat g(rank, rank);
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j) g(i, j) = numerator(s(i, j));
  return IntLattice(std::move(g), std::string(1, char(type)) + std::to_string(rank));
}

}  // namespace latmass
