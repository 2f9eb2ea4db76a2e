#include <doctest.h>

#include "wcurve/eulerchar.hpp"

using namespace wcurve;

TEST_CASE("zeta(-1) by Siegel's formula") {
  CHECK(zeta_minus1(5) == Rational(1, 30));
  CHECK(zeta_minus1(8) == Rational(1, 12));
  CHECK(zeta_minus1(12) == Rational(1, 6));
  CHECK(zeta_minus1(13) == Rational(1, 6));
  CHECK(zeta_minus1(17) == Rational(1, 3));
}

TEST_CASE("conductor factor") {
  CHECK(conductor_factor(discriminant_split(5)) == Rational(1));
  // D = 45 = 3^2 * 5, (5|3) = -1: F = 1 + 1/9 = 10/9
  CHECK(conductor_factor(discriminant_split(45)) == Rational(10, 9));
  // D = 20 = 2^2 * 5, (5|2) = -1: F = 1 + 1/4
  CHECK(conductor_factor(discriminant_split(20)) == Rational(5, 4));
  // square D: D0 = 1 and (1|p) = 1, so F = prod (1 - p^-2)
  CHECK(conductor_factor(discriminant_split(9)) == Rational(8, 9));
  CHECK(conductor_factor(discriminant_split(16)) == Rational(3, 4));
}

TEST_CASE("chi oracles from the reference table") {
  // non-square rows: chi(W_D) = -9/2 chi(X_D)
  CHECK(chi_WD(discriminant_split(5)) == Rational(-3, 10));
  CHECK(chi_WD(discriminant_split(8)) == Rational(-3, 4));
  CHECK(chi_WD(discriminant_split(44)) == Rational(-21, 2));
  CHECK(chi_XD(discriminant_split(5)) == Rational(1, 15));
  // square rows use -f^2 (f-2) F / 16
  CHECK(chi_WD(discriminant_split(9)) == Rational(-1, 2));
  CHECK(chi_WD(discriminant_split(16)) == Rational(-3, 2));
  CHECK(chi_WD(discriminant_split(25)) == Rational(-9, 2));
}

TEST_CASE("spin components sum to the total") {
  for (std::int64_t d : {17LL, 33LL, 41LL, 73LL, 89LL, 105LL, 145LL}) {
    Discriminant D = discriminant_split(d);
    auto [c0, c1] = chi_WD_components(D);
    CHECK(c0 + c1 == chi_WD(D));
    CHECK(c0 == c1);  // non-square components are equal
  }
  for (std::int64_t d : {25LL, 49LL, 81LL, 121LL}) {
    Discriminant D = discriminant_split(d);
    auto [c0, c1] = chi_WD_components(D);
    CHECK(c0 + c1 == chi_WD(D));
  }
}

TEST_CASE("square component split oracle") {
  // D = 49: -f^2(f-1)F/32 and -f^2(f-3)F/32 with f = 7, F = 48/49
  auto [c0, c1] = chi_WD_components(discriminant_split(49));
  CHECK(c0 == Rational(-9));
  CHECK(c1 == Rational(-6));
}

TEST_CASE("chi of the product and special loci") {
  Discriminant D44 = discriminant_split(44);
  CHECK(chi_PD(D44) == chi_XD(D44) * Rational(-5, 2));
  CHECK(chi_SD(D44) == 0);
  // square D: chi(S_D) = -f^2 F / 12
  CHECK(chi_SD(discriminant_split(9)) == Rational(-2, 3));
}

TEST_CASE("chi record assembles consistently") {
  ChiRecord r = chi_record(discriminant_split(17));
  REQUIRE(r.components.has_value());
  CHECK(r.components->first + r.components->second == r.chi_WD);
  CHECK(r.chi_SD == 0);
  CHECK_THROWS_AS(chi_XD(discriminant_split(9)), domain_error);
}
