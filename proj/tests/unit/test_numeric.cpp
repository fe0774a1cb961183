#include <doctest.h>
#include <latmass/numeric.hpp>

using namespace latmass;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(3) == Rat(0));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(8) == Rat(-1, 30));
  CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("kronecker symbol") {
  // quadratic residues mod 7: 1,2,4
  CHECK(kronecker(1, 7) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(3, 7) == -1);
  CHECK(kronecker(7, 7) == 0);
  // (d|2): 0 for even, +1 for +-1 mod 8, -1 for +-3 mod 8
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(17, 2) == 1);
  // multiplicativity over a few pairs
  for (int a = -6; a <= 6; ++a)
    CHECK(kronecker(a, 15) == kronecker(a, 3) * kronecker(a, 5));
}

TEST_CASE("fundamental discriminant") {
  CHECK(fundamental_discriminant(Int(-3)) == -3);
  CHECK(fundamental_discriminant(Int(-4)) == -4);
  CHECK(fundamental_discriminant(Int(-12)) == -3);
  CHECK(fundamental_discriminant(Int(4)) == 1);
  CHECK(fundamental_discriminant(Int(16)) == 1);
  CHECK(fundamental_discriminant(Int(8)) == 8);
  CHECK(fundamental_discriminant(Int(12)) == 12);
}

TEST_CASE("generalized bernoulli numbers") {
  // B_{1,chi} for chi = kronecker(-4|.): (1*1 + 3*(-1))/4 = -1/2
  CHECK(bernoulli_chi(1, Int(-4)) == Rat(-1, 2));
  // B_{1,chi} for chi = kronecker(-3|.): (1 - 2)/3 = -1/3
  CHECK(bernoulli_chi(1, Int(-3)) == Rat(-1, 3));
  // d0 = 1 falls back to plain Bernoulli numbers
  CHECK(bernoulli_chi(4, Int(1)) == bernoulli(4));
}

TEST_CASE("misc integer helpers") {
  CHECK(isqrt_floor(Int(48)) == 6);
  CHECK(isqrt_floor(Int(49)) == 7);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(ceil_div(Int(-7), Int(2)) == -3);
  CHECK(valuation(Int(48), Int(2)) == 4);
  CHECK(next_prime(Int(3)) == 5);
  CHECK(is_prime(Int(97)));
  auto f = factorize(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, int>{2, 3});
  CHECK(f[1] == std::pair<Int, int>{3, 2});
  CHECK(f[2] == std::pair<Int, int>{5, 1});
}
