#include <doctest.h>
#include <latmass/matrix.hpp>

using namespace latmass;

TEST_CASE("bareiss determinant") {
  IMat m(3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2});
  CHECK(det(m) == 4);  // A3 Gram
  IMat h(2, 2, {0, -1, -1, 0});
  CHECK(det(h) == -1);
  CHECK(det(IMat(0, 0)) == 1);
}

TEST_CASE("hnf row basis") {
  IMat m(3, 2, {2, 0, 3, 0, 0, 5});
  IMat b = row_basis_hnf(m);
  REQUIRE(b.rows() == 2);
  CHECK(b(0, 0) == 1);  // gcd(2,3)
  CHECK(b(0, 1) == 0);
  CHECK(b(1, 0) == 0);
  CHECK(b(1, 1) == 5);
}

TEST_CASE("smith divisors") {
  IMat m(2, 2, {2, 0, 0, 2});
  auto d = smith_divisors(m);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);

  IMat a2(2, 2, {2, -1, -1, 2});
  d = smith_divisors(a2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 3);
  CHECK(d[1] % d[0] == 0);
}

TEST_CASE("rational inverse and kernel") {
  QMat m(2, 2, {Rat(2), Rat(1), Rat(1), Rat(1)});
  QMat inv = inverse(m);
  QMat id = m * inv;
  CHECK(id == QMat::identity(2));

  QMat deg(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  QMat k = kernel(deg);
  REQUIRE(k.rows() == 1);
  // kernel spanned by (-2, 1)
  CHECK(k(0, 0) * Rat(1) + k(0, 1) * Rat(2) == 0);
  CHECK(rank(deg) == 1);
}
