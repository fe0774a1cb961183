#include <doctest.h>
#include <fixtures.hpp>
#include <latmass/json_io.hpp>

using namespace latmass;
using namespace latmass::testing;

TEST_CASE("hyperbolic plane") {
  IntLattice h = hyperbolic_plane();
  CHECK(h.gram == IMat(2, 2, {0, -1, -1, 0}));
  CHECK(h.determinant() == -1);
  CHECK(h.is_even());
  CHECK_FALSE(h.is_positive_definite());
}

TEST_CASE("rescale and direct sum") {
  IntLattice e = e8();
  CHECK(rescale(e, 1).gram == e.gram);
  IntLattice s2 = rescale(e, 2);
  for (std::size_t i = 0; i < 8; ++i) CHECK(s2.gram(i, i) == 4);
  CHECK(s2.determinant() == Int(256));
  CHECK(rescale(IntLattice(IMat(1, 1, {2})), 3).gram == IMat(1, 1, {6}));

  IntLattice empty(IMat(0, 0));
  CHECK(direct_sum(e, empty).gram == e.gram);
  IntLattice big = direct_sum(sqrt2(e8()), d_n(8));
  CHECK(big.rank() == 16);
  CHECK(big.determinant() == Int(1) << 10);

  IntLattice hh = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  CHECK(hh.rank() == 4);
  CHECK(hh.determinant() == 1);
}

TEST_CASE("rescale by 2 is always even") {
  for (auto l : {a_n(3), d_n(4), diag_lattice({Int(1), Int(3), Int(7)})})
    CHECK(rescale(l, 2).is_even());
}

TEST_CASE("determinant is multiplicative over direct sums") {
  std::vector<IntLattice> pool{a_n(1), a_n(2), a_n(3), d_n(4), d_n(5),
                               diag_lattice({Int(2), Int(6)})};
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      CHECK(direct_sum(pool[i], pool[j]).determinant() ==
            pool[i].determinant() * pool[j].determinant());
}

TEST_CASE("d_plus") {
  CHECK_THROWS_AS(d_plus(12), domain_error);
  IntLattice d8p = d_plus(8);
  CHECK(d8p.rank() == 8);
  CHECK(d8p.determinant() == 1);
  CHECK(d8p.is_even());
  IntLattice d16p = d_plus(16);
  CHECK(d16p.rank() == 16);
  CHECK(d16p.determinant() == 1);
  CHECK(d16p.is_even());
}

TEST_CASE("lattice_from_generators") {
  // gcd lattice: Z 2e + Z 3e = Z e
  RationalSpan span;
  span.ambient_gram = QMat(1, 1, {Rat(1)});
  span.generators = {{Rat(2)}, {Rat(3)}};
  CHECK(lattice_from_generators(span).gram == IMat(1, 1, {1}));

  // standard basis of E8 ambient reproduces E8 up to basis choice
  IntLattice e = e8();
  RationalSpan se;
  se.ambient_gram = e.gram.cast<Rat>();
  for (unsigned i = 0; i < 8; ++i) {
    std::vector<Rat> v(8, Rat(0));
    v[i] = 1;
    se.generators.push_back(v);
  }
  IntLattice back = lattice_from_generators(se);
  CHECK(back.determinant() == 1);
  CHECK(back.rank() == 8);

  // idempotence: feeding the produced basis back is stable
  RationalSpan again;
  again.ambient_gram = back.gram.cast<Rat>();
  for (unsigned i = 0; i < 8; ++i) {
    std::vector<Rat> v(8, Rat(0));
    v[i] = 1;
    again.generators.push_back(v);
  }
  CHECK(lattice_from_generators(again).gram == back.gram);

  // degenerate span reports the radical dimension
  RationalSpan deg;
  deg.ambient_gram = QMat(2, 2, {Rat(2), Rat(0), Rat(0), Rat(0)});
  deg.generators = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK_THROWS_WITH_AS(lattice_from_generators(deg),
                       doctest::Contains("radical dimension 1"), domain_error);
}

TEST_CASE("dual_and_discriminant") {
  CHECK(dual_and_discriminant(e8()).order == 1);
  CHECK(dual_and_discriminant(e8()).elementary_divisors.empty());

  auto d = dual_and_discriminant(sqrt2(e8()));
  CHECK(d.order == 256);
  REQUIRE(d.elementary_divisors.size() == 8);
  for (const auto& e : d.elementary_divisors) CHECK(e == 2);

  auto one = dual_and_discriminant(IntLattice(IMat(1, 1, {2})));
  CHECK(one.order == 2);
  REQUIRE(one.elementary_divisors.size() == 1);
  CHECK(one.elementary_divisors[0] == 2);

  // order of k-rescaled unimodular lattice of rank n is k^n
  for (int k : {2, 3}) {
    auto g = dual_and_discriminant(rescale(d_plus(8), k));
    Int expect = 1;
    for (int i = 0; i < 8; ++i) expect *= k;
    CHECK(g.order == expect);
  }
}

TEST_CASE("lattice json round trip") {
  IntLattice e = e8();
  e.label = "E8";
  IntLattice back = lattice_from_json(lattice_to_json(e));
  CHECK(back.gram == e.gram);
  CHECK(back.label == "E8");
  CHECK_THROWS(lattice_from_json("{\"gram\": [[1, 2]]}"));
}
