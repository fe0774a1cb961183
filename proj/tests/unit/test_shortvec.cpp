#include <doctest.h>
#include <fixtures.hpp>

using namespace latmass;
using namespace latmass::testing;

namespace {

// Box-bound brute force: |x_i| <= bound must cover all vectors of the target
// norm for the specific fixtures used here.
std::vector<IVec> brute_vectors(const IntLattice& l, const Int& m, int bound) {
  std::size_t n = l.rank();
  std::vector<IVec> out;
  IVec x(n, Int(-bound));
  for (;;) {
    if (bilinear(l.gram, x, x) == m) out.push_back(x);
    std::size_t pos = 0;
    while (pos < n && x[pos] == bound) {
      x[pos] = -bound;
      ++pos;
    }
    if (pos == n) break;
    ++x[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("E8 has 240 roots") {
  auto roots = vectors_of_norm(e8(), 2);
  CHECK(roots.size() == 240);
  CHECK(std::is_sorted(roots.begin(), roots.end()));
}

TEST_CASE("rank one") {
  auto v = vectors_of_norm(IntLattice(IMat(1, 1, {2})), 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == IVec{Int(-1)});
  CHECK(v[1] == IVec{Int(1)});
}

TEST_CASE("agrees with box brute force on small lattices") {
  for (auto l : {a_n(2), a_n(3), d_n(4), diag_lattice({Int(2), Int(4), Int(6)})}) {
    for (Int m : {Int(2), Int(4), Int(6)}) {
      auto fast = vectors_of_norm(l, m);
      auto slow = brute_vectors(l, m, 4);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("sqrt2E8+D8 has 112 norm-2 vectors") {
  IntLattice big = direct_sum(sqrt2(e8()), d_n(8));
  auto v2 = vectors_of_norm(big, 2);
  CHECK(v2.size() == 112);
}

TEST_CASE("counts are even and negation-closed") {
  for (auto l : {a_n(2), d_n(4), e8()}) {
    auto classes = short_vectors(l, 8);
    for (auto& [norm, vecs] : classes) {
      CHECK(vecs.size() % 2 == 0);
      for (auto& v : vecs) {
        IVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        CHECK(std::binary_search(vecs.begin(), vecs.end(), neg));
      }
    }
  }
}

TEST_CASE("worker count does not change results") {
  IntLattice l = direct_sum(a_n(3), a_n(2));
  CHECK(short_vectors(l, 6, 1) == short_vectors(l, 6, 4));
  CHECK(vectors_of_norm(e8(), 4, 1) == vectors_of_norm(e8(), 4, 3));
}

TEST_CASE("indefinite input is rejected") {
  CHECK_THROWS_AS(vectors_of_norm(hyperbolic_plane(), 2), domain_error);
}

TEST_CASE("min_norm") {
  CHECK(min_norm(e8()) == 2);
  CHECK(min_norm(sqrt2(e8())) == 4);
}
