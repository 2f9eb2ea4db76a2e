#include <doctest.h>

#include "wcurve/prototypes.hpp"

using namespace wcurve;

TEST_CASE("prototype enumeration at small D") {
  auto e5 = enumerate_prototypes(discriminant_split(5));
  REQUIRE(e5.size() == 1);
  CHECK(e5[0].e == -1);
  CHECK(e5[0].c == 1);
  CHECK(e5[0].b == 3);

  auto e8 = enumerate_prototypes(discriminant_split(8));
  REQUIRE(e8.size() == 1);
  CHECK(e8[0].e == 0);
  CHECK(e8[0].c == 2);
  CHECK(e8[0].b == 2);
}

TEST_CASE("E(76) exactly") {
  auto e = enumerate_prototypes(discriminant_split(76));
  REQUIRE(e.size() == 3);
  auto has = [&](std::int64_t a, std::int64_t c, std::int64_t b) {
    for (const auto& p : e)
      if (p.e == a && p.c == c && p.b == b) return true;
    return false;
  };
  CHECK(has(-2, 2, 20));
  CHECK(has(-2, 4, 10));
  CHECK(has(2, 4, 10));
}

TEST_CASE("improper prototypes of square discriminants are removed") {
  // (-3,3,3) = 3*(-1,1,1), (-4,4,4) = 2*(-2,2,2)
  auto e9 = enumerate_prototypes(discriminant_split(9));
  REQUIRE(e9.size() == 1);
  CHECK(e9[0].c == 1);
  auto e16 = enumerate_prototypes(discriminant_split(16));
  REQUIRE(e16.size() == 1);
  CHECK(e16[0].e == 0);
}

TEST_CASE("prototype identity and constraints hold on a sweep") {
  for (std::int64_t d = 5; d <= 500; ++d) {
    if (!is_valid_discriminant(d)) continue;
    for (const auto& p : enumerate_prototypes_all(discriminant_split(d))) {
      CHECK(-p.e * p.e + 2 * p.b * p.c == d);
      CHECK(((d - p.e) % 2 + 2) % 2 == 0);
      CHECK(((d - p.c) % 2 + 2) % 2 == 0);
      CHECK(((d - p.b) % 2 + 2) % 2 == 0);
      CHECK(std::abs(p.e) <= p.c);
      CHECK(p.c <= p.b);
      if (p.e == p.c || p.b == p.c) CHECK(p.e <= 0);
    }
  }
}

TEST_CASE("counting route equals class number route for all D <= 2000") {
  // orbifold_signature throws internal_error if #E(D) disagrees with the
  // closed form, so calling it is the dual-route check.
  for (std::int64_t d = 10; d <= 2000; ++d) {
    if (!is_valid_discriminant(d)) continue;
    auto sig = orbifold_signature(discriminant_split(d));
    CHECK(sig.e4 == 0);
    CHECK(sig.e5 == 0);
    CHECK(sig.e2 >= 0);
  }
}

TEST_CASE("special signatures at D = 5 and 8") {
  auto s5 = orbifold_signature(discriminant_split(5));
  CHECK(s5.e2 == 1);
  CHECK(s5.e4 == 0);
  CHECK(s5.e5 == 1);
  auto s8 = orbifold_signature(discriminant_split(8));
  CHECK(s8.e2 == 0);
  CHECK(s8.e4 == 1);
  CHECK(s8.e5 == 0);
}

TEST_CASE("spin laws on all applicable D <= 2000") {
  for (std::int64_t d = 17; d <= 2000; d += 8) {
    Discriminant D = discriminant_split(d);
    // e2_by_spin internally enforces: equal halves for non-square D,
    // single component (f+1)/2 mod 2 for square D.
    auto [n0, n1] = e2_by_spin(D);
    CHECK(n0 + n1 ==
          static_cast<std::int64_t>(enumerate_prototypes(D).size()));
    if (!D.is_square) CHECK(n0 == n1);
  }
}

TEST_CASE("spin is rejected off its domain") {
  PinwheelPrototype p{-1, 1, 3, 5};
  CHECK_THROWS_AS(spin_of_prototype(p), domain_error);
  CHECK_THROWS_AS(e2_by_spin(discriminant_split(12)), domain_error);
  CHECK_THROWS_AS(e2_by_spin(discriminant_split(9)), domain_error);
}
