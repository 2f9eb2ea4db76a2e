#include <doctest.h>

#include "wcurve/arith.hpp"
#include "wcurve/classnum.hpp"

using namespace wcurve;

TEST_CASE("class numbers of small fundamental discriminants") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-7) == 1);
  CHECK(class_number(-8) == 1);
  CHECK(class_number(-11) == 1);
  CHECK(class_number(-15) == 2);
  CHECK(class_number(-20) == 2);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-47) == 5);
  CHECK(class_number(-71) == 7);
  CHECK(class_number(-163) == 1);
}

TEST_CASE("class numbers of non-maximal orders") {
  CHECK(class_number(-12) == 1);   // conductor 2 over -3
  CHECK(class_number(-16) == 1);
  CHECK(class_number(-27) == 1);
  CHECK(class_number(-32) == 2);
  CHECK(class_number(-36) == 2);
  CHECK(class_number(-48) == 2);
  CHECK(class_number(-75) == 2);
}

TEST_CASE("weighted class numbers halve or third the unit cases") {
  CHECK(weighted_class_number(-3) == Rational(1, 3));
  CHECK(weighted_class_number(-4) == Rational(1, 2));
  CHECK(weighted_class_number(-7) == Rational(1));
  CHECK(weighted_class_number(-20) == Rational(2));
}

TEST_CASE("reduced forms are reduced and primitive") {
  for (std::int64_t C = -3; C >= -400; --C) {
    if ((-C) % 4 != 0 && (-C) % 4 != 3) continue;
    auto forms = reduced_forms(C);
    CHECK(static_cast<std::int64_t>(forms.size()) == class_number(C));
    for (const auto& f : forms) {
      CHECK(f.disc() == C);
      // reduced: |b| <= a <= c, b >= 0 when |b| = a or a = c
      CHECK(std::abs(f.b) <= f.a);
      CHECK(f.a <= f.c);
      if (std::abs(f.b) == f.a || f.a == f.c) CHECK(f.b >= 0);
      CHECK(gcd64(gcd64(f.a, f.b), f.c) == 1);
    }
  }
}

TEST_CASE("invalid discriminant is rejected") {
  CHECK_THROWS_AS(class_number(5), domain_error);
  CHECK_THROWS_AS(class_number(-5), domain_error);
}
