#include <doctest.h>
#include <fixtures.hpp>

using namespace latmass;
using namespace latmass::testing;

TEST_CASE("type validation") {
  CHECK_THROWS_AS(check_simple_type(SimpleType::D, 2), domain_error);
  CHECK_THROWS_AS(check_simple_type(SimpleType::E, 9), domain_error);
  CHECK_THROWS_AS(check_simple_type(SimpleType::G, 3), domain_error);
  CHECK_NOTHROW(check_simple_type(SimpleType::A, 1));
}

TEST_CASE("root counts by reflection closure") {
  CHECK(all_roots(SimpleType::A, 2).size() == 6);
  CHECK(all_roots(SimpleType::B, 3).size() == 18);
  CHECK(all_roots(SimpleType::C, 3).size() == 18);
  CHECK(all_roots(SimpleType::D, 4).size() == 24);
  CHECK(all_roots(SimpleType::G, 2).size() == 12);
  CHECK(all_roots(SimpleType::F, 4).size() == 48);
  CHECK(all_roots(SimpleType::E, 6).size() == 72);
  CHECK(all_roots(SimpleType::E, 8).size() == 240);
}

TEST_CASE("long root counts match the closed forms") {
  auto count_long = [](SimpleType t, unsigned n) {
    QMat s = symmetrized_form(t, n);
    Int c = 0;
    for (const auto& r : all_roots(t, n)) {
      Rat norm = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) norm += Rat(r[i]) * s(i, j) * Rat(r[j]);
      if (norm == 2) c += 1;
    }
    return c;
  };
  for (auto [t, n] : std::vector<std::pair<SimpleType, unsigned>>{
           {SimpleType::A, 4}, {SimpleType::B, 3}, {SimpleType::B, 8},
           {SimpleType::C, 4}, {SimpleType::D, 5}, {SimpleType::F, 4},
           {SimpleType::G, 2}, {SimpleType::E, 6}}) {
    CHECK(count_long(t, n) == long_root_count(t, n));
  }
}

TEST_CASE("highest root marks") {
  auto marks_b12 = highest_root_marks(SimpleType::B, 12);
  CHECK(marks_b12[0] == 1);
  for (std::size_t i = 1; i < 12; ++i) CHECK(marks_b12[i] == 2);

  auto marks_e8 = highest_root_marks(SimpleType::E, 8);
  for (const auto& m : marks_e8) CHECK(m >= 2);

  auto marks_a3 = highest_root_marks(SimpleType::A, 3);
  for (const auto& m : marks_a3) CHECK(m == 1);
}

TEST_CASE("cominimal weights") {
  CHECK(cominimal_weights(SimpleType::E, 8) == std::vector<unsigned>{0});
  CHECK(cominimal_weights(SimpleType::A, 4) == std::vector<unsigned>{0, 1, 2, 3, 4});
  CHECK(cominimal_weights(SimpleType::D, 6) == std::vector<unsigned>{0, 1, 5, 6});
  CHECK(cominimal_weights(SimpleType::B, 12) == std::vector<unsigned>{0, 1});
  CHECK(cominimal_weights(SimpleType::C, 4) == std::vector<unsigned>{0, 4});
  CHECK(cominimal_weights(SimpleType::F, 4) == std::vector<unsigned>{0});
  CHECK(cominimal_weights(SimpleType::G, 2) == std::vector<unsigned>{0});
}

TEST_CASE("fundamental weights pair correctly with coroots") {
  for (auto [t, n] : std::vector<std::pair<SimpleType, unsigned>>{
           {SimpleType::B, 4}, {SimpleType::C, 3}, {SimpleType::E, 6}, {SimpleType::G, 2}}) {
    QMat s = symmetrized_form(t, n);
    auto d = simple_root_half_norms(t, n);
    for (unsigned j = 1; j <= n; ++j) {
      auto w = fundamental_weight(t, n, j);
      for (unsigned i = 0; i < n; ++i) {
        Rat pairing = 0;
        for (unsigned k = 0; k < n; ++k) pairing += w[k] * s(k, i);
        CHECK(pairing / d[i] == (i + 1 == j ? Rat(1) : Rat(0)));
      }
    }
  }
}

TEST_CASE("long root lattices") {
  CHECK(long_root_lattice(SimpleType::A, 1).gram == IMat(1, 1, {2}));

  // B_12 -> D_12, G_2 -> A_2, C_4 -> A_1^4, F_4 -> D_4 (up to isometry)
  CHECK(is_isometric(long_root_lattice(SimpleType::B, 12), d_n(12)).found());
  CHECK(is_isometric(long_root_lattice(SimpleType::G, 2), a_n(2)).found());
  CHECK(is_isometric(long_root_lattice(SimpleType::C, 4), a1_pow(4)).found());
  CHECK(is_isometric(long_root_lattice(SimpleType::F, 4), d_n(4)).found());
  CHECK(is_isometric(long_root_lattice(SimpleType::E, 8), e8()).found());
}
